#include<iostream>
using namespace std;
int main()
{
	int x;
	unsigned long result = 1;
	cout<<"Input a number: ";
	cin>>x;
	int k=x;
	while(k>1)
	{
		result = result * k;
		k--;
	}
	cout<<x<<"! = "<<result<<endl;
	return 0;
}
