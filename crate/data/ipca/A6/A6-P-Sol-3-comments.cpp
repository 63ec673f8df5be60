#include<iostream.h>
#include<conio.h>
int main()
{
	int sel, i=1;   // sel: user selection, i: counter
	cout<<"Enter 0 for even and 1 for odd: ";
	cin>>sel;
	// go through 1..50
	while(i<=50)
	{
		/* the remainder tells us
		   whether i is even or odd */
		switch(i%2)
		{
			case 0:     // even
				if(sel==0)
					cout<<i<<" ";
				break;
			case 1:     // odd
				if(sel==1)
					cout<<i<<" ";
				break;
		}
		i++;
	}

	getch();
	return 0;
}
