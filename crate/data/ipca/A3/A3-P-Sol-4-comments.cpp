#include<iostream>
using namespace std;
int main()
{
	int num, flag = 0;   // flag becomes 1 when a divisor is found
	cout<<"Enter a positive number: ";
	cin>>num;
	// 0 and 1 are not prime
	if(num <= 1)
		flag = 1;
	/* try every candidate divisor */
	for(int i = 2; i < num; i++)
	{
		if(num % i == 0)
		{
			flag = 1;
			break;   // no need to continue
		}
	}

	if(flag == 0)
		cout<<num<<" is a prime number."<<endl;
	else
		cout<<num<<" is not a prime number."<<endl;
	return 0;
}
