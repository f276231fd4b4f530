#include <cstdio>

int main() {
  std::puts("lbiso: command line interface not wired up yet");
  return 2;
}
