// Prints the derived operator data for small n in a readable form, used to
// pin down the tabulated reference values.
#include <iostream>

#include "mvop/diffops.hpp"
#include "mvop/symfun.hpp"

using namespace mvop;

namespace {

std::string phi_str(const PhiPoly& p) {
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        std::string mono;
        for (size_t i = 0; i < m.size(); ++i)
            for (int r = 0; r < m[i]; ++r) mono += " f" + std::to_string(i + 1);
        out += "  [" + mono + " ] :";
        for (int i = 0; i < c.rows(); ++i) {
            out += "  row" + std::to_string(i + 1) + ":";
            for (int j = 0; j < c.cols(); ++j) out += " " + to_string(c(i, j));
        }
        out += "\n";
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 2;

    std::cout << "== second order symbol, n=" << n << " ==\n";
    const auto G = diffops::second_order_symbol(n);
    for (int k = 0; k < n; ++k)
        for (int l = k; l < n; ++l)
            std::cout << "G[" << k + 1 << "][" << l + 1 << "]:\n" << phi_str(G[k][l]);

    std::cout << "== first order data ==\n";
    const auto LC = diffops::derive_first_order_data(n);
    for (int k = 0; k < n; ++k) {
        std::cout << "L_" << k + 1 << ":\n" << phi_str(LC[k].L);
        std::cout << "C_" << k + 1 << ":\n";
        for (int i = 0; i < LC[k].C.rows(); ++i) {
            for (int j = 0; j < LC[k].C.cols(); ++j) std::cout << to_string(LC[k].C(i, j)) << " ";
            std::cout << "\n";
        }
    }

    std::cout << "== upsilon ==\n";
    const auto U = diffops::derive_upsilon(n);
    for (int k = 0; k < n; ++k) std::cout << "Y_" << k + 1 << ":\n" << phi_str(U[k]);

    std::cout << "== eigenvalue tables ==\n";
    const std::vector<int> zero(n, 0);
    auto show = [&](const std::vector<int>& d) {
        std::cout << "d=";
        for (int x : d) std::cout << x << " ";
        std::cout << " plus:";
        for (const auto& v : diffops::eigenvalue_diag(n, d, +1)) std::cout << " " << to_string(v);
        std::cout << "  minus:";
        for (const auto& v : diffops::eigenvalue_diag(n, d, -1)) std::cout << " " << to_string(v);
        std::cout << "\n";
    };
    show(zero);
    for (int j = 0; j < n; ++j) {
        std::vector<int> d(zero);
        d[j] = 1;
        show(d);
    }
    return 0;
}
