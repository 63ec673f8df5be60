#include<iostream.h>
#include<conio.h>
int main()
{
	int n, count=0;     // count = number of divisors
	cout<<"Enter a number: ";
	cin>>n;
	// count every divisor of n
	for(int i=1; i<=n; i++)
	{
		if(n%i==0)
			count++;
	}
	/* a prime has exactly
	   two divisors */
	if(count==2)
		cout<<"The number is prime";
	else
		cout<<"The number is not prime";

	getch();
	return 0;
}
