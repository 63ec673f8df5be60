#include<iostream.h>
#include<conio.h>
int main()
{
	int n, r, s=0;
	cout<<"Enter the number to reverse: ";
	cin>>n;
	while(n>0)
	{
		r=n%10;
		s=s*10+r;
		n=n/10;
	}
	cout<<"Reverse of the number is "<<s;
	getch();
	return 0;
}
