#include <iostream>

int main() {
  std::cout << "dpe6: placeholder\n";
  return 0;
}
