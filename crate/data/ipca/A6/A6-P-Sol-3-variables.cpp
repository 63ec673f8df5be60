#include<iostream.h>
#include<conio.h>
int main()
{
	int mode, num=1;
	cout<<"Enter 0 for even and 1 for odd: ";
	cin>>mode;
	while(num<=50)
	{
		switch(num%2)
		{
			case 0:
				if(mode==0)
					cout<<num<<" ";
				break;
			case 1:
				if(mode==1)
					cout<<num<<" ";
				break;
		}
		num++;
	}
	getch();
	return 0;
}
