#include<iostream.h>
#include<conio.h>
void addition(int m, int n, int &result)
{
	result=m+n;
}
int main()
{
	int num1, num2, total;
	char ch='y';
	while(ch=='y' || ch=='Y')
	{
		cout<<"Enter a: ";
		cin>>num1;
		cout<<"Enter b: ";
		cin>>num2;
		addition(num1, num2, total);
		cout<<"a + b = "<<total<<endl;
		cout<<"Add again? (y/n) ";
		cin>>ch;
	}
	getch();
	return 0;
}
