#include <doctest.h>
#include <functional>

#include <random>

#include "mvop/spherical.hpp"
#include "mvop/symfun.hpp"

using namespace mvop;
using namespace mvop::symfun;

TEST_CASE("elementary symmetric function conventions") {
    CHECK(elementary_u(0, 2) == LaurentPoly::one(2));
    // e_{n+1}(u) = 1 on the torus
    CHECK(elementary_u(3, 2) == LaurentPoly::one(2));
    // n=2: e_1 = u1+u2+u3 = 3 phi_1 (phi in t-variables, e in u)
    CHECK(elementary_u(1, 2).doubled_exponents() == spherical::zonal_phi(1, 2) * Rational(3));
    CHECK_THROWS(elementary_u(4, 2));
}

TEST_CASE("power sum conventions") {
    CHECK(power_sum_u(0, 2) == LaurentPoly::constant(2, 3));
    CHECK(power_sum_u(1, 1) == elementary_u(1, 1));
}

TEST_CASE("Newton-Girard conversions") {
    // p_1 = e_1
    CHECK(power_sums_to_elementary({Rational(5)}) == std::vector<Rational>{Rational(5)});
    // e_2 = (p_1^2 - p_2)/2
    const auto e = power_sums_to_elementary({Rational(3), Rational(5)});
    CHECK(e[1] == (Rational(9) - Rational(5)) / 2);

    std::mt19937 rng(17);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Rational> p(4);
        for (auto& x : p) x = Rational(num(rng), den(rng));
        CHECK(elementary_to_power_sums(power_sums_to_elementary(p)) == p);
        CHECK(power_sums_to_elementary(elementary_to_power_sums(p)) == p);
    }
}

TEST_CASE("derived elementary functions") {
    // e^{(i)}_0 = 1
    for (int n = 1; n <= 3; ++n)
        for (int i = 1; i <= n + 1; ++i)
            CHECK(e_derived_free(i, 0, n) == FreePoly::constant(n + 1, 1));
    // n=1: e^{(1)}_1 = d/du_1 (u_1 u_2) = u_2
    CHECK(e_derived_free(1, 1, 1) == FreePoly::variable(2, 2));
    // r e_r = sum_i u_i e^{(i)}_{r-1}
    for (int n = 1; n <= 5; ++n)
        for (int r = 1; r <= n + 1; ++r) {
            FreePoly rhs(n + 1);
            for (int i = 1; i <= n + 1; ++i)
                rhs += FreePoly::variable(n + 1, i) * e_derived_free(i, r - 1, n);
            CHECK(elementary_free(r, n) * Rational(r) == rhs);
        }
}

TEST_CASE("telescoping identity") {
    CHECK(check_telescoping(0, 0, 0, 2));
    CHECK(check_telescoping(3, 1, 2, 2));
    for (int n = 1; n <= 3; ++n)
        for (int N = 0; N <= 2 * n + 2; ++N)
            for (int a = 0; a <= N; ++a)
                for (int b = a; b <= N; ++b) CHECK(check_telescoping(N, a, b, n));
}

TEST_CASE("difference-reduction identity") {
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= n + 1; ++m)
            for (int k = 1; k <= n + 1; ++k)
                for (int i = 1; i <= n + 1; ++i) CHECK(check_reduce_difference(m, k, i, n));
}

TEST_CASE("express_in_phi base cases") {
    // p_1(u) for n=2 equals 3 phi_1
    const PhiPoly p = express_in_phi_u(power_sum_u(1, 2));
    PhiPoly expect(2, 1, 1);
    expect += PhiPoly::monomial_scalar(2, {1, 0}, 3);
    CHECK(p == expect);

    // squared-difference density for n=1: (t^2 - t^{-2})^2 -> 4 phi^2 - 4
    LaurentPoly d(1);
    d.add_term({4, 0}, 1);
    d.add_term({0, 0}, -2);
    d.add_term({-4, 0}, 1);
    PhiPoly q = express_in_phi(d);
    PhiPoly expect2(1, 1, 1);
    expect2 += PhiPoly::monomial_scalar(1, {2}, 4);
    expect2 += PhiPoly::monomial_scalar(1, {0}, -4);
    CHECK(q == expect2);

    // non-symmetric input is rejected
    CHECK_THROWS_AS(express_in_phi(LaurentPoly::variable(2, 1, 2)), SymmetryError);
    // odd character content is rejected
    LaurentPoly odd(2);
    odd.add_term({1, 0, 0}, 1);
    odd.add_term({0, 1, 0}, 1);
    odd.add_term({0, 0, 1}, 1);
    CHECK_THROWS_AS(express_in_phi(odd), ParityError);
}

TEST_CASE("express_in_phi inverts substitution on random polynomials") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> num(-8, 8);
    std::uniform_int_distribution<int> den(1, 5);
    for (int n = 1; n <= 3; ++n) {
        const auto phis = spherical::zonal_basis(n);
        for (int trial = 0; trial < 8; ++trial) {
            PhiPoly p(n, 1, 1);
            std::uniform_int_distribution<int> pick(0, 4);
            // random polynomial of total degree <= 4
            std::function<void(std::vector<int>&, int, int)> gen =
                [&](std::vector<int>& m, int pos, int left) {
                    if (pos == n) {
                        if (pick(rng) < 2) p += PhiPoly::monomial_scalar(n, m, Rational(num(rng), den(rng)));
                        return;
                    }
                    for (int v = 0; v <= left; ++v) {
                        m[pos] = v;
                        gen(m, pos + 1, left - v);
                        m[pos] = 0;
                    }
                };
            std::vector<int> m(n, 0);
            gen(m, 0, 4);
            const MatrixLaurent sub = p.substitute(phis);
            CHECK(express_in_phi(sub(0, 0)) == p);
        }
    }
}
