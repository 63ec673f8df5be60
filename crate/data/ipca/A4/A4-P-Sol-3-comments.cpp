#include<iostream.h>
#include<conio.h>
int main()
{
	int n, r, s=0;   // r = last digit, s = reversed number
	cout<<"Enter the number to reverse: ";
	cin>>n;
	/* peel off digits from the right
	   and append them to s */
	do
	{
		r=n%10;      // last digit
		s=s*10+r;    // append
		n=n/10;      // drop last digit
	}while(n>0);

	cout<<"Reverse of the number is "<<s;
	getch();
	return 0;
}
