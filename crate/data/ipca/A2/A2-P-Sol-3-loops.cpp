#include<iostream.h>
#include<conio.h>
int main()
{
	int n, f=1, c;
	cout<<"Enter number to find factorial: ";
	cin>>n;
	for(c=1; c<=n; c=c+1)
	{
		f=f*c;
	}
	cout<<"Factorial of "<<n<<" is "<<f;
	getch();
	return 0;
}
