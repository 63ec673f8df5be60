#include<iostream.h>
#include<conio.h>
int main()
{
	int sel, i=1;
	cout<<"Enter 0 for even and 1 for odd: ";
	cin>>sel;
	while(i<=50)
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
		i++;
	}
	getch();
	return 0;
}
