#include<iostream>
using namespace std;
int main()
{
	int x;
	unsigned long result = 1;
	cout<<"Input a number: ";
	cin>>x;
	for(int k=x; k>1; k--)
		result = result * k;
	cout<<x<<"! = "<<result<<endl;
	return 0;
}
