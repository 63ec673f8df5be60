#include<iostream>
using namespace std;
bool checkPrime(int num)
{
	if(num < 2)
		return false;
	for(int d = 2; d * d <= num; d++)
	{
		if(num % d == 0)
			return false;
	}
	return true;
}
int main()
{
	int num;
	cout<<"Enter a number: ";
	cin>>num;
	if(checkPrime(num))
		cout<<num<<" is prime"<<endl;
	else
		cout<<num<<" is not prime"<<endl;
	return 0;
}
