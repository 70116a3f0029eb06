#include <iostream>

int main() {
    std::cout << "g2pcurve: placeholder\n";
    return 0;
}
