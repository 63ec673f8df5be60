#include<iostream>
using namespace std;
int main()
{
	const int MAX = 20;
	int a[MAX];
	int n, i = 0;
	cout<<"Enter size of array (max 20): ";
	cin>>n;
	while(n > MAX || n < 1)
	{
		cout<<"Invalid size, enter again: ";
		cin>>n;
	}
	cout<<"Enter "<<n<<" values"<<endl;
	while(i < n)
	{
		cin>>a[i];
		i++;
	}
	int t = a[0];
	a[0] = a[n-1];
	a[n-1] = t;
	cout<<"Swapped array: ";
	i = 0;
	while(i < n)
	{
		cout<<a[i]<<"\t";
		i++;
	}
	return 0;
}
