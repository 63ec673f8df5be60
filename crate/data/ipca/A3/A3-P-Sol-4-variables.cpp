#include<iostream>
using namespace std;
int main()
{
	int n, notPrime = 0;
	cout<<"Enter a positive number: ";
	cin>>n;
	if(n <= 1)
		notPrime = 1;
	for(int d = 2; d < n; d++)
	{
		if(n % d == 0)
		{
			notPrime = 1;
			break;
		}
	}
	if(notPrime == 0)
		cout<<n<<" is a prime number."<<endl;
	else
		cout<<n<<" is not a prime number."<<endl;
	return 0;
}
