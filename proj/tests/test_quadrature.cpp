#include <doctest.h>

#include "mvop/quadrature.hpp"
#include "mvop/spherical.hpp"
#include "mvop/weight.hpp"

using namespace mvop;
using namespace mvop::quadrature;

TEST_CASE("plain Haar averages") {
    CHECK(integrate_exact(LaurentPoly::one(2), false) == 1);
    CHECK(integrate_exact(LaurentPoly::variable(2, 1, 2), false) == 0);
    CHECK(std::abs(integrate_grid(LaurentPoly::variable(2, 1, 2), false)) < 1e-14);
}

TEST_CASE("the density integrates to (n+1)!") {
    for (int n = 1; n <= 4; ++n)
        CHECK(integrate_exact(LaurentPoly::one(n), true) == factorial(n + 1));
    for (int n = 1; n <= 3; ++n) {
        const Complex v = integrate_grid(LaurentPoly::one(n), true);
        CHECK(std::abs(v - to_double(factorial(n + 1))) < 1e-10 * to_double(factorial(n + 1)));
    }
}

TEST_CASE("|delta| and the signed density agree up to sign") {
    for (int n = 1; n <= 3; ++n) {
        const LaurentPoly a = delta_abs(n);
        const LaurentPoly s = delta_signed(n);
        const int m = n * (n + 1) / 2;
        CHECK(a == (m % 2 == 0 ? s : -s));
    }
}

TEST_CASE("grid doubling is stable once exact") {
    const LaurentPoly f = spherical::zonal_phi(1, 2) * spherical::zonal_phi(2, 2);
    const int deg = f.max_abs_exponent() + delta_abs(2).max_abs_exponent();
    const Complex v1 = integrate_grid(f, true, deg + 1);
    const Complex v2 = integrate_grid(f, true, 2 * (deg + 1));
    CHECK(std::abs(v1 - v2) < 1e-12);
    // and equals the exact constant term
    CHECK(std::abs(v1 - to_double(integrate_exact(f, true))) < 1e-12);
}

TEST_CASE("grid cap guards against runaway sizes") {
    const int old = max_fourier_degree();
    set_max_fourier_degree(4);
    CHECK_THROWS_AS(integrate_grid(LaurentPoly::one(2), true), GridOverflow);
    set_max_fourier_degree(old);
}

TEST_CASE("inner product of identities is H_0 = diag(3,1,3) for (2,1)") {
    const auto spec = weight::make_weight_spec(2, 1);
    const PhiPoly I = PhiPoly::identity(2, 3);
    const RationalMatrix h = inner_product_exact(I, I, spec.psi_adj_psi, spec.phis);
    CHECK(h == RationalMatrix::diagonal({3, 1, 3}));

    // the floating grid agrees
    const auto hg = inner_product_grid(I, I, spec.psi_adj_psi, spec.phis);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            CHECK(std::abs(hg[r][c] - to_double(h(r, c))) < 1e-12);

    // and so does the pairing engine
    PairingEngine engine(spec.psi_adj_psi, spec.phis);
    CHECK(engine.pair(I, I) == h);
}

TEST_CASE("inner products are Hermitian") {
    const auto spec = weight::make_weight_spec(2, 1);
    PhiPoly P = PhiPoly::identity(2, 3);
    P += PhiPoly::variable(2, 1) * RationalMatrix::identity(3);
    PhiPoly Q = PhiPoly::variable(2, 2) * RationalMatrix::identity(3);
    const RationalMatrix a = inner_product_exact(P, Q, spec.psi_adj_psi, spec.phis);
    const RationalMatrix b = inner_product_exact(Q, P, spec.psi_adj_psi, spec.phis);
    CHECK(a == b.transposed());  // real rational entries: adjoint = transpose
    CHECK(inner_product_exact(PhiPoly(2, 3, 3), Q, spec.psi_adj_psi, spec.phis).is_zero());
}

TEST_CASE("pairing engine agrees with the direct route on degree-one inputs") {
    const auto spec = weight::make_weight_spec(2, 1);
    PairingEngine engine(spec.psi_adj_psi, spec.phis);
    const PhiPoly I = PhiPoly::identity(2, 3);
    const PhiPoly P = PhiPoly::variable(2, 1) * RationalMatrix::identity(3);
    CHECK(engine.pair(I, P) == inner_product_exact(I, P, spec.psi_adj_psi, spec.phis));
}

TEST_CASE("rank-three identity pairing gives the dimension quotients") {
    const auto spec = weight::make_weight_spec(3, 1);
    PairingEngine engine(spec.psi_adj_psi, spec.phis);
    const PhiPoly I = PhiPoly::identity(3, 4);
    CHECK(engine.pair(I, I) ==
          RationalMatrix::diagonal({4, Rational(2, 3), Rational(2, 3), 4}));
}

TEST_CASE("the degree-0/degree-1 Gram block is stable across grids") {
    const auto spec = weight::make_weight_spec(2, 1);
    const PhiPoly I = PhiPoly::identity(2, 3);
    const PhiPoly P = PhiPoly::variable(2, 1) * RationalMatrix::identity(3);
    const auto a = inner_product_grid(I, P, spec.psi_adj_psi, spec.phis, 16);
    const auto b = inner_product_grid(I, P, spec.psi_adj_psi, spec.phis, 32);
    const RationalMatrix exact = inner_product_exact(I, P, spec.psi_adj_psi, spec.phis);
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            CHECK(std::abs(a[r][c] - b[r][c]) < 1e-12);
            CHECK(std::abs(a[r][c] - to_double(exact(r, c))) < 1e-12);
        }
}
