#include <doctest.h>

#include <random>

#include "mvop/diffops.hpp"
#include "mvop/symfun.hpp"

using namespace mvop;
using namespace mvop::diffops;

namespace {

PhiPoly scalar_poly(int n, std::initializer_list<std::pair<std::vector<int>, Rational>> terms) {
    PhiPoly p(n, 1, 1);
    for (const auto& [m, c] : terms) p += PhiPoly::monomial_scalar(n, m, c);
    return p;
}

}  // namespace

TEST_CASE("second order symbol for n=2") {
    const auto G = second_order_symbol(2);
    CHECK(G[0][0] == scalar_poly(2, {{{2, 0}, Rational(8, 3)}, {{0, 1}, Rational(-8, 3)}}));
    CHECK(G[0][1] == scalar_poly(2, {{{1, 1}, Rational(4, 3)}, {{0, 0}, Rational(-4, 3)}}));
    CHECK(G[1][0] == G[0][1]);
    CHECK(G[1][1] == scalar_poly(2, {{{0, 2}, Rational(8, 3)}, {{1, 0}, Rational(-8, 3)}}));
}

TEST_CASE("second order symbol for n=3 vanishes at the identity point") {
    const auto G = second_order_symbol(3);
    CHECK(G[0][0] == scalar_poly(3, {{{2, 0, 0}, 3}, {{0, 1, 0}, -3}}));
    CHECK(G[1][1] == scalar_poly(3, {{{0, 2, 0}, 4},
                                     {{1, 0, 1}, Rational(-32, 9)},
                                     {{0, 0, 0}, Rational(-4, 9)}}));
    // gradients vanish at the identity, so every entry must vanish there
    const std::vector<Rational> ones(3, 1);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) CHECK(G[a][b].evaluate(ones)(0, 0) == 0);
}

TEST_CASE("gradient contraction basics and basis independence") {
    const auto phis = spherical::zonal_basis(2);
    CHECK(gradient_contract(LaurentPoly::one(2), phis[0]).is_zero());
    CHECK(gradient_contract(phis[0], phis[1]) == gradient_contract(phis[1], phis[0]));
    // recompute with the basis E_11 - E_jj
    std::vector<std::vector<int>> alt = {{1, -1, 0}, {1, 0, -1}};
    CHECK(gradient_contract_with_basis(phis[0], phis[0], alt) ==
          gradient_contract(phis[0], phis[0]));
}

TEST_CASE("first order data solves its defining identity") {
    for (int n = 1; n <= 3; ++n) {
        const MatrixLaurent psi = spherical::psi0(n);
        const auto phis = spherical::zonal_basis(n);
        const auto LC = derive_first_order_data(n);
        for (int k = 1; k <= n; ++k) {
            MatrixLaurent rhs = gradient_contract(psi, phis[k - 1]);
            rhs = rhs + rhs;
            const PhiPoly U = LC[k - 1].L + PhiPoly::constant(n, LC[k - 1].C);
            CHECK(psi * U.substitute(phis) == rhs);
            CHECK(LC[k - 1].L.total_degree() <= 1);
        }
    }
}

TEST_CASE("first order data for n=2 matches the tabulated values") {
    const auto LC = derive_first_order_data(2);
    PhiPoly L1(2, 3, 3);
    {
        RationalMatrix f1(3, 3);
        f1(0, 0) = Rational(8, 3);
        f1(1, 1) = 4;
        f1(2, 2) = Rational(4, 3);
        L1.add_term({1, 0}, f1);
        RationalMatrix f2(3, 3);
        f2(0, 1) = -2;
        L1.add_term({0, 1}, f2);
    }
    CHECK(LC[0].L == L1);
    RationalMatrix C1(3, 3);
    C1(0, 2) = Rational(-4, 3);
    C1(1, 0) = Rational(-8, 3);
    C1(2, 1) = -2;
    CHECK(LC[0].C == C1);
}

TEST_CASE("upsilon solves its defining identity") {
    for (int n = 1; n <= 3; ++n) {
        const MatrixLaurent psi = spherical::psi0(n);
        const auto phis = spherical::zonal_basis(n);
        const auto U = derive_upsilon(n);
        for (int l = 1; l <= n; ++l) {
            const MatrixLaurent rhs = action_gradient_contract(psi, phis[l - 1]);
            CHECK(psi * U[l - 1].substitute(phis) == rhs);
            CHECK(U[l - 1].total_degree() <= 1);
        }
    }
}

TEST_CASE("upsilon for n=2 matches the tabulated values") {
    const auto U = derive_upsilon(2);
    PhiPoly Y1(2, 3, 3);
    {
        RationalMatrix c(3, 3);
        c(0, 2) = Rational(2, 3);
        c(1, 0) = Rational(-4, 3);
        c(2, 1) = Rational(-1, 3);
        Y1.add_term({0, 0}, c);
        RationalMatrix f1(3, 3);
        f1(0, 0) = Rational(4, 3);
        f1(1, 1) = Rational(-2, 3);
        f1(2, 2) = Rational(-2, 3);
        Y1.add_term({1, 0}, f1);
        RationalMatrix f2(3, 3);
        f2(0, 1) = 1;
        Y1.add_term({0, 1}, f2);
    }
    CHECK(U[0] == Y1);
}

TEST_CASE("apply: zero, constants, and the degree-zero eigenvalues") {
    const auto ops = build_operators(2, 1);
    const PhiPoly I = PhiPoly::identity(2, 3);
    CHECK(apply(ops.plus, PhiPoly(2, 3, 3)).is_zero());
    CHECK(apply(ops.plus, I) ==
          PhiPoly::constant(2, RationalMatrix::diagonal({Rational(8, 3), Rational(16, 3),
                                                         Rational(8, 3)})));
    CHECK(apply(ops.minus, I) ==
          PhiPoly::constant(2, RationalMatrix::diagonal({Rational(8, 3), Rational(0),
                                                         Rational(-8, 3)})));
}

TEST_CASE("operators commute on random polynomials") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> num(-5, 5);
    for (int n = 2; n <= 3; ++n) {
        const auto ops = build_operators(n, 1);
        const int N = n + 1;
        for (int trial = 0; trial < 4; ++trial) {
            PhiPoly Q(n, N, N);
            for (int extra = 0; extra < 5; ++extra) {
                std::vector<int> m(n, 0);
                int left = 3;
                for (int i = 0; i < n && left > 0; ++i) {
                    m[i] = std::uniform_int_distribution<int>(0, left)(rng);
                    left -= m[i];
                }
                RationalMatrix c(N, N);
                for (int i = 0; i < N; ++i)
                    for (int j = 0; j < N; ++j) c(i, j) = num(rng);
                Q.add_term(m, std::move(c));
            }
            CHECK(apply(ops.plus, apply(ops.minus, Q)) == apply(ops.minus, apply(ops.plus, Q)));
        }
    }
}

TEST_CASE("eigenvalue tables for the tabulated ranks") {
    // n=2 closed forms
    auto gp2 = [](int d1, int d2) {
        const Rational quad = Rational(4, 3) * (d1 * d1 + d1 * d2 + d2 * d2);
        return std::vector<Rational>{quad + Rational(16, 3) * d1 + Rational(14, 3) * d2 + Rational(8, 3),
                                     quad + 6 * d1 + 6 * d2 + Rational(16, 3),
                                     quad + Rational(14, 3) * d1 + Rational(16, 3) * d2 + Rational(8, 3)};
    };
    auto gm2 = [](int d1, int d2) {
        return std::vector<Rational>{Rational(4, 3) * d1 + Rational(2, 3) * d2 + Rational(8, 3),
                                     Rational(-2, 3) * d1 + Rational(2, 3) * d2,
                                     Rational(-2, 3) * d1 + Rational(-4, 3) * d2 + Rational(-8, 3)};
    };
    for (int d1 = 0; d1 <= 3; ++d1)
        for (int d2 = 0; d2 <= 3; ++d2) {
            CHECK(eigenvalue_diag(2, {d1, d2}, +1) == gp2(d1, d2));
            CHECK(eigenvalue_diag(2, {d1, d2}, -1) == gm2(d1, d2));
        }

    // n=3: degree-zero values and the linear table at a sample degree
    CHECK(eigenvalue_diag(3, {0, 0, 0}, -1) ==
          std::vector<Rational>{Rational(15, 4), Rational(5, 4), Rational(-5, 4), Rational(-15, 4)});
    CHECK(eigenvalue_diag(3, {1, 1, 1}, -1) ==
          std::vector<Rational>{Rational(3, 2) + 1 + Rational(1, 2) + Rational(15, 4),
                                Rational(-1, 2) + 1 + Rational(1, 2) + Rational(5, 4),
                                Rational(-1, 2) - 1 + Rational(1, 2) - Rational(5, 4),
                                Rational(-1, 2) - 1 - Rational(3, 2) - Rational(15, 4)});
}

TEST_CASE("coefficient degree bound holds for built operators") {
    for (int n = 1; n <= 3; ++n) {
        const auto ops = build_operators(n, 0);
        for (const auto& [alpha, P] : ops.plus.coefficients) {
            int s = 0;
            for (int x : alpha) s += x;
            CHECK(P.total_degree() <= s);
        }
        CHECK(ops.minus.order() == 1);
        CHECK(ops.plus.order() == 2);
    }
}
