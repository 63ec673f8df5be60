#include<iostream>
using namespace std;
int main()
{
	int c, start;
	cout<<"Switchboard"<<endl;
	cout<<"1 - Even"<<endl<<"2 - Odd"<<endl;
	cin>>c;
	switch(c)
	{
	case 1:
		start = 2;
		break;
	case 2:
		start = 1;
		break;
	default:
		start = 0;
	}
	if(start == 0)
	{
		cout<<"Invalid input"<<endl;
		return 1;
	}
	for(int k = start; k <= 50; k = k + 2)
	{
		cout<<k<<"\t";
	}
	cout<<endl;
	return 0;
}
