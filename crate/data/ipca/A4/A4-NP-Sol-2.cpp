#include<iostream>
using namespace std;
int main()
{
	int num, rev = 0;
	cout<<"Enter number: ";
	cin>>num;
	for( ; num > 0; num = num / 10)
	{
		rev = rev * 10 + num % 10;
	}
	cout<<"Reverse: "<<rev<<endl;
	return 0;
}
