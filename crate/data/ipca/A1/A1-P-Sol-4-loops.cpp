#include<iostream.h>
#include<conio.h>
void main()
{
	clrscr();
	int list[10], last, hold;
	int j = 0;
	cout<<"Enter 10 elements of the array"<<endl;
	while(j<10)
	{
		cout<<"element "<<j<<" = ";
		cin>>list[j];
		j++;
	}
	last = 9;
	hold = list[0];
	list[0] = list[last];
	list[last] = hold;
	cout<<"The array after swapping first and last element is"<<endl;
	j = 0;
	do
	{
		cout<<list[j]<<endl;
		j++;
	} while(j<10);
	getch();
}
