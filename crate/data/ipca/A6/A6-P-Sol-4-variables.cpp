#include<iostream>
using namespace std;
int main()
{
	int option, first;
	cout<<"Switchboard"<<endl;
	cout<<"1 - Even"<<endl<<"2 - Odd"<<endl;
	cin>>option;
	switch(option)
	{
	case 1:
		first = 2;
		break;
	case 2:
		first = 1;
		break;
	default:
		first = 0;
	}
	if(first == 0)
	{
		cout<<"Invalid input"<<endl;
		return 1;
	}
	int number = first;
	while(number <= 50)
	{
		cout<<number<<"\t";
		number = number + 2;
	}
	cout<<endl;
	return 0;
}
