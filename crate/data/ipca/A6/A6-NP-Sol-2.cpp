#include<iostream>
using namespace std;
int main()
{
	char option;
	cout<<"Press e for even numbers or o for odd numbers: ";
	cin>>option;
	switch(option)
	{
		case 'e':
		case 'E':
			for(int n = 2; n <= 50; n += 2)
				cout<<n<<endl;
			break;
		case 'o':
		case 'O':
			for(int n = 1; n < 50; n += 2)
				cout<<n<<endl;
			break;
		default:
			cout<<"Wrong option"<<endl;
			break;
	}
	return 0;
}
