#include<iostream.h>
#include<conio.h>
int main()
{
	int n, f=1, c=1;
	cout<<"Enter number to find factorial: ";
	cin>>n;
	while(c<=n)
	{
		f=f*c;
		c=c+1;
	}
	cout<<"Factorial of "<<n<<" is "<<f;
	getch();
	return 0;
}
