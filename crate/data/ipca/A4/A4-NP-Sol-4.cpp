#include<iostream>
using namespace std;
int main()
{
	long number;
	cout<<"Please enter a number: ";
	cin>>number;
	if(number == 0)
		cout<<0;
	cout<<"Reversed: ";
	while(number > 0)
	{
		cout<<number % 10;
		number = number / 10;
	}
	cout<<endl;
	return 0;
}
