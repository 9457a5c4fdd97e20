#include <iostream>
#include "pencilstab/pencilstab.hpp"
int main() { std::cout << "stub\n"; return 0; }
