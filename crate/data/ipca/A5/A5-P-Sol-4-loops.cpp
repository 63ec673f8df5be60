#include<iostream>
using namespace std;
int getNumber(int index)
{
	int value;
	cout<<"Number "<<index<<": ";
	cin>>value;
	return value;
}
int addNumbers(int a, int b)
{
	int result = a + b;
	return result;
}
int main()
{
	int numbers[2];
	int i = 0;
	while(i < 2)
	{
		numbers[i] = getNumber(i + 1);
		i++;
	}
	cout<<"Addition = "<<addNumbers(numbers[0], numbers[1])<<endl;
	return 0;
}
