#include<iostream>
using namespace std;
int readValue(int pos)
{
	int v;
	cout<<"Number "<<pos<<": ";
	cin>>v;
	return v;
}
int sumOf(int x, int y)
{
	int s = x + y;
	return s;
}
int main()
{
	int vals[2];
	for(int j = 0; j < 2; j++)
		vals[j] = readValue(j + 1);
	cout<<"Addition = "<<sumOf(vals[0], vals[1])<<endl;
	return 0;
}
