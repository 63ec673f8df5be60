#include<iostream>
using namespace std;
// reads one number from the keyboard
int getNumber(int index)
{
	int value;
	cout<<"Number "<<index<<": ";
	cin>>value;
	return value;
}
// returns a + b
int addNumbers(int a, int b)
{
	int result = a + b;
	return result;
}
/* main: read two numbers and print their sum */
int main()
{
	int numbers[2];
	for(int i = 0; i < 2; i++)     // read both numbers
		numbers[i] = getNumber(i + 1);

	cout<<"Addition = "<<addNumbers(numbers[0], numbers[1])<<endl;
	return 0;
}
