#include<iostream>
using namespace std;
int main()
{
	int value;
	unsigned long product = 1;
	cout<<"Input a number: ";
	cin>>value;
	for(int m=value; m>1; m--)
		product = product * m;
	cout<<value<<"! = "<<product<<endl;
	return 0;
}
