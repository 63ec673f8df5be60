#include<iostream.h>
#include<conio.h>
void main()
{
	clrscr();
	int list[10], last, hold;
	cout<<"Enter 10 elements of the array"<<endl;
	for(int j=0; j<10; j++)
	{
		cout<<"element "<<j<<" = ";
		cin>>list[j];
	}
	last = 9;
	hold = list[0];
	list[0] = list[last];
	list[last] = hold;
	cout<<"The array after swapping first and last element is"<<endl;
	for(j=0; j<10; j++)
	{
		cout<<list[j]<<endl;
	}
	getch();
}
