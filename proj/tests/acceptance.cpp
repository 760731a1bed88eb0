// placeholder: replaced by the full acceptance suite
#include <cstdio>
int main() {
    std::puts("FAIL acceptance suite pending");
    return 1;
}
