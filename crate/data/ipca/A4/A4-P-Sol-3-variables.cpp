#include<iostream.h>
#include<conio.h>
int main()
{
	int number, digit, result=0;
	cout<<"Enter the number to reverse: ";
	cin>>number;
	do
	{
		digit=number%10;
		result=result*10+digit;
		number=number/10;
	}while(number>0);
	cout<<"Reverse of the number is "<<result;
	getch();
	return 0;
}
