#include<iostream>
using namespace std;
/* Computes x! by multiplying downwards */
int main()
{
	int x;
	unsigned long result = 1;   // running product

	cout<<"Input a number: ";
	cin>>x;
	// multiply x * (x-1) * ... * 2
	for(int k=x; k>1; k--)
		result = result * k;
	cout<<x<<"! = "<<result<<endl;   // show answer
	return 0;
}
