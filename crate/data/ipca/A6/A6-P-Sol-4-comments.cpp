#include<iostream>
using namespace std;
int main()
{
	int c, start;
	// show the switchboard menu
	cout<<"Switchboard"<<endl;
	cout<<"1 - Even"<<endl<<"2 - Odd"<<endl;
	cin>>c;
	/* decide the first number to print */
	switch(c)
	{
	case 1:
		start = 2;   // even numbers start at 2
		break;
	case 2:
		start = 1;   // odd numbers start at 1
		break;
	default:
		start = 0;
	}
	if(start == 0)
	{
		cout<<"Invalid input"<<endl;
		return 1;
	}

	int k = start;
	while(k <= 50)   // step by two
	{
		cout<<k<<"\t";
		k = k + 2;
	}
	cout<<endl;
	return 0;
}
