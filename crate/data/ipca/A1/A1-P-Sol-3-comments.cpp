#include<iostream.h>
#include<conio.h>
// program to swap the first and last element of an array
int main(){
int Arr[100],n,temp; // array and its size

cout<<"Enter # of elements you want to insert ";
cin>>n;
/* read all the elements
   one by one */
for(int i=0;i<n;i=i+1)
{
cout<<"Enter element "<<i+1<<":";
cin>>Arr[i];
}
// swap first and last
temp=Arr[0];
Arr[0]=Arr[n-1];
Arr[n-1]=temp;

cout<<"\nArray after swapping"<<endl;
for(i=0;i<n;i=i+1)   // print the array
cout<<Arr[i]<<" ";
return 0; // done
}
