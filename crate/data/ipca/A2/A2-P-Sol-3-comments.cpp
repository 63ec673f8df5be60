#include<iostream.h>
#include<conio.h>
// factorial using a while loop
int main()
{
	int n, f=1, c=1;   // f holds the result, c is the counter
	cout<<"Enter number to find factorial: ";
	cin>>n;

	/* multiply f by every value from 1 to n */
	while(c<=n)
	{
		f=f*c;
		c=c+1;
	}

	cout<<"Factorial of "<<n<<" is "<<f;
	getch();   // wait for a key
	return 0;
}
