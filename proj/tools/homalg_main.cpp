#include <cstdio>

#include "homalg/version.hpp"

int main() {
    std::printf("%s\n", homalg::version_string());
    return 0;
}
