#include<iostream>
using namespace std;
// prints the digits of a number in reverse order
int main()
{
	long number;
	cout<<"Please enter a number: ";
	cin>>number;
	if(number == 0)   // special case
		cout<<0;
	cout<<"Reversed: ";

	/* print the last digit, then remove it */
	while(number > 0)
	{
		cout<<number % 10;
		number = number / 10;
	}
	cout<<endl;
	return 0;
}
