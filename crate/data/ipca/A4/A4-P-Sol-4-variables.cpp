#include<iostream>
using namespace std;
int main()
{
	long input;
	cout<<"Please enter a number: ";
	cin>>input;
	if(input == 0)
		cout<<0;
	cout<<"Reversed: ";
	while(input > 0)
	{
		cout<<input % 10;
		input = input / 10;
	}
	cout<<endl;
	return 0;
}
