#include<iostream.h>
#include<conio.h>
int main()
{
	int num, fac=1, count=1;
	cout<<"Enter number to find factorial: ";
	cin>>num;
	while(count<=num)
	{
		fac=fac*count;
		count=count+1;
	}
	cout<<"Factorial of "<<num<<" is "<<fac;
	getch();
	return 0;
}
