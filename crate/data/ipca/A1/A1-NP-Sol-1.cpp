#include <iostream>
using namespace std;

int main()
{
    int size;
    int numbers[50];
    cout << "How many numbers? ";
    cin >> size;
    for (int k = 0; k < size; k++)
    {
        cout << "Number " << k + 1 << ": ";
        cin >> numbers[k];
    }
    int first = numbers[0];
    numbers[0] = numbers[size - 1];
    numbers[size - 1] = first;
    cout << "After swap:" << endl;
    for (int k = 0; k < size; k++)
    {
        cout << numbers[k] << " ";
    }
    cout << endl;
    return 0;
}
