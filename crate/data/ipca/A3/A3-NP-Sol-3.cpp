#include<iostream.h>
#include<conio.h>
int main()
{
	int n, count=0;
	cout<<"Enter a number: ";
	cin>>n;
	for(int i=1; i<=n; i++)
	{
		if(n%i==0)
			count++;
	}
	if(count==2)
		cout<<"The number is prime";
	else
		cout<<"The number is not prime";
	getch();
	return 0;
}
