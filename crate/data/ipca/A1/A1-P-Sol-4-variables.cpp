#include<iostream.h>
#include<conio.h>
void main()
{
	clrscr();
	int arr[10], end, tmp;
	cout<<"Enter 10 elements of the array"<<endl;
	for(int x=0; x<10; x++)
	{
		cout<<"element "<<x<<" = ";
		cin>>arr[x];
	}
	end = 9;
	tmp = arr[0];
	arr[0] = arr[end];
	arr[end] = tmp;
	cout<<"The array after swapping first and last element is"<<endl;
	for(x=0; x<10; x++)
	{
		cout<<arr[x]<<endl;
	}
	getch();
}
