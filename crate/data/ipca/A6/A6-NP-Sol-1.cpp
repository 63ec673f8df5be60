#include <iostream>
using namespace std;

int main()
{
    int choice;
    cout << "1. Print even numbers" << endl;
    cout << "2. Print odd numbers" << endl;
    cout << "Enter your choice: ";
    cin >> choice;
    switch (choice)
    {
    case 1:
        for (int i = 1; i <= 50; i++)
        {
            if (i % 2 == 0)
                cout << i << " ";
        }
        break;
    case 2:
        for (int i = 1; i <= 50; i++)
        {
            if (i % 2 != 0)
                cout << i << " ";
        }
        break;
    default:
        cout << "Invalid choice";
    }
    cout << endl;
    return 0;
}
