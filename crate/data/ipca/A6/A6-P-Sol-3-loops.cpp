#include<iostream.h>
#include<conio.h>
int main()
{
	int sel, i;
	cout<<"Enter 0 for even and 1 for odd: ";
	cin>>sel;
	for(i=1; i<=50; i++)
	{
		switch(i%2)
		{
			case 0:
				if(sel==0)
					cout<<i<<" ";
				break;
			case 1:
				if(sel==1)
					cout<<i<<" ";
				break;
		}
	}
	getch();
	return 0;
}
