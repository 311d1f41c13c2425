#include <iostream>

int main() {
  std::cerr << "CLI not wired up yet\n";
  return 2;
}
