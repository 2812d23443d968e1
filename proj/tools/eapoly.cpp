#include <cstdio>

int main() {
  std::puts("eapoly: placeholder");
  return 0;
}
