#include <iostream>

#include "mvop/verify.hpp"

int main() {
    const bool ok = mvop::verify::run_suite(std::cout);
    std::cout << (ok ? "all checks passed\n" : "some checks FAILED\n");
    return ok ? 0 : 1;
}
