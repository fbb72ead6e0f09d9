#include <cstdio>
int main() { std::puts("linc: not yet implemented"); return 2; }
