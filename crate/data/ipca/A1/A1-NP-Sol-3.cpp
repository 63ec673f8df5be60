#include<iostream.h>
#include<conio.h>
int main(){
int Arr[100],n,temp;
cout<<"Enter # of elements you want to insert ";
cin>>n;
for(int i=0;i<n;i=i+1)
{
cout<<"Enter element "<<i+1<<":";
cin>>Arr[i];
}
temp=Arr[0];
Arr[0]=Arr[n-1];
Arr[n-1]=temp;
cout<<"\nArray after swapping"<<endl;
for(i=0;i<n;i=i+1)
cout<<Arr[i]<<" ";
return 0;
}
