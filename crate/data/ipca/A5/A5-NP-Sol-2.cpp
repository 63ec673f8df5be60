#include<iostream>
using namespace std;
float sum(float, float);
int main()
{
	float x, y;
	cout<<"Enter two numbers: ";
	cin>>x>>y;
	cout<<"The sum of "<<x<<" and "<<y<<" is "<<sum(x, y)<<endl;
	return 0;
}
float sum(float p, float q)
{
	float s;
	s = p + q;
	return s;
}
