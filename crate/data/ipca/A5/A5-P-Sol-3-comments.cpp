#include<iostream.h>
#include<conio.h>
// stores x + y in z (passed by reference)
void addition(int x, int y, int &z)
{
	z=x+y;
}
int main()
{
	int a, b, c;
	char again='y';     // loop control
	/* keep adding pairs until
	   the user answers n */
	while(again=='y' || again=='Y')
	{
		cout<<"Enter a: ";
		cin>>a;
		cout<<"Enter b: ";
		cin>>b;
		addition(a, b, c);   // c = a + b
		cout<<"a + b = "<<c<<endl;

		cout<<"Add again? (y/n) ";
		cin>>again;
	}
	getch();
	return 0;
}
