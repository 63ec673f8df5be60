#include<iostream.h>
#include<conio.h>
int main()
{
	int n, count=0;
	cout<<"Enter a number: ";
	cin>>n;
	int i=1;
	while(i<=n)
	{
		if(n%i==0)
			count++;
		i++;
	}
	if(count==2)
		cout<<"The number is prime";
	else
		cout<<"The number is not prime";
	getch();
	return 0;
}
