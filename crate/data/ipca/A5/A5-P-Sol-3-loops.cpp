#include<iostream.h>
#include<conio.h>
void addition(int x, int y, int &z)
{
	z=x+y;
}
int main()
{
	int a, b, c;
	char again;
	do
	{
		cout<<"Enter a: ";
		cin>>a;
		cout<<"Enter b: ";
		cin>>b;
		addition(a, b, c);
		cout<<"a + b = "<<c<<endl;
		cout<<"Add again? (y/n) ";
		cin>>again;
	}while(again=='y' || again=='Y');
	getch();
	return 0;
}
