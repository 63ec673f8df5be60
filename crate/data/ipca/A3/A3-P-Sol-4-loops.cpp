#include<iostream>
using namespace std;
int main()
{
	int num, flag = 0;
	cout<<"Enter a positive number: ";
	cin>>num;
	if(num <= 1)
		flag = 1;
	int i = 2;
	while(i < num)
	{
		if(num % i == 0)
		{
			flag = 1;
			break;
		}
		i++;
	}
	if(flag == 0)
		cout<<num<<" is a prime number."<<endl;
	else
		cout<<num<<" is not a prime number."<<endl;
	return 0;
}
