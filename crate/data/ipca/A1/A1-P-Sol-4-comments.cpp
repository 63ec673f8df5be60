#include<iostream.h>
#include<conio.h>

/*
 * Swap first and last element
 * of an array of 10 integers
 */
void main()
{
	clrscr();   // clear the screen
	int list[10], last, hold;
	cout<<"Enter 10 elements of the array"<<endl;
	// input loop
	for(int j=0; j<10; j++)
	{
		cout<<"element "<<j<<" = ";
		cin>>list[j];
	}

	last = 9;           // index of last element
	hold = list[0];
	list[0] = list[last];
	list[last] = hold;  /* swapped */

	cout<<"The array after swapping first and last element is"<<endl;
	// output loop
	for(j=0; j<10; j++)
	{
		cout<<list[j]<<endl;
	}
	getch();
}
