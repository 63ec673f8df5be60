#include<iostream.h>
#include<conio.h>
int main()
{
	int number, divisors=0;
	cout<<"Enter a number: ";
	cin>>number;
	for(int j=1; j<=number; j++)
	{
		if(number%j==0)
			divisors++;
	}
	if(divisors==2)
		cout<<"The number is prime";
	else
		cout<<"The number is not prime";
	getch();
	return 0;
}
