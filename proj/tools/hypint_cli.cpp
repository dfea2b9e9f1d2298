#include <cstdio>
int main(){ std::puts("hypint: placeholder"); return 0; }
