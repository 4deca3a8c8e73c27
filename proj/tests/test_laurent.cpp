#include <doctest.h>

#include <random>

#include "mvop/laurent.hpp"
#include "mvop/spherical.hpp"

using namespace mvop;

namespace {

LaurentPoly random_poly(int n, std::mt19937& rng, int terms = 6, int maxexp = 3) {
    std::uniform_int_distribution<int> exp_dist(-maxexp, maxexp);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    LaurentPoly p(n);
    for (int t = 0; t < terms; ++t) {
        ExponentVector e(n + 1);
        for (auto& x : e) x = exp_dist(rng);
        p.add_term(std::move(e), Rational(num(rng), den(rng)));
    }
    return p;
}

TorusPoint random_point(int n, std::mt19937& rng) {
    std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
    std::vector<double> th(n);
    for (auto& x : th) x = ang(rng);
    return TorusPoint(th);
}

}  // namespace

TEST_CASE("canonical form of exponent vectors") {
    CHECK(canonicalize({1, 1, 1}) == ExponentVector{0, 0, 0});
    CHECK(canonicalize({2, 0, 0}) == ExponentVector{2, 0, 0});
    CHECK(canonicalize({0, 1, 2}) == ExponentVector{-2, -1, 0});
    // vectors differing by multiples of (1,...,1) agree
    CHECK(canonicalize({3, 1, 2}) == canonicalize({1, -1, 0}));
}

TEST_CASE("constants and the torus relation") {
    const LaurentPoly one = LaurentPoly::one(2);
    TorusPoint a({0.3, -1.2});
    CHECK(one.evaluate(a) == Complex(1.0, 0.0));

    // t1 t2 t3 = 1
    LaurentPoly t123 = LaurentPoly::monomial(2, {1, 1, 1});
    CHECK(t123 == one);
    CHECK(std::abs(t123.evaluate(a) - 1.0) < 1e-15);
}

TEST_CASE("zonal function evaluates to one at the identity") {
    for (int n = 1; n <= 3; ++n) {
        const LaurentPoly phi1 = spherical::zonal_phi(1, n);
        TorusPoint e(std::vector<double>(n, 0.0));
        CHECK(std::abs(phi1.evaluate(e) - 1.0) < 1e-14);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937 rng(7);
    for (int n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 340; ++trial) {
            const LaurentPoly p = random_poly(n, rng);
            const LaurentPoly q = random_poly(n, rng);
            const TorusPoint a = random_point(n, rng);
            const Complex lhs = (p * q).evaluate(a);
            const Complex rhs = p.evaluate(a) * q.evaluate(a);
            CHECK(std::abs(lhs - rhs) < 1e-12);
            CHECK(std::abs((p + q).evaluate(a) - (p.evaluate(a) + q.evaluate(a))) < 1e-12);
        }
    }
}

TEST_CASE("derive_along acts by the exponent pairing") {
    // t1^2 with X = diag(1,-1,0) -> 2 t1^2
    LaurentPoly p = LaurentPoly::variable(2, 1, 2);
    CHECK(p.derive_along({1, -1, 0}) == p * Rational(2));
    CHECK(LaurentPoly::one(2).derive_along({1, -1, 0}).is_zero());

    // phi_1 for n=2: term-by-term
    const LaurentPoly phi1 = spherical::zonal_phi(1, 2);
    LaurentPoly expect(2);
    expect.add_term({2, 0, 0}, Rational(2, 3));
    expect.add_term({0, 2, 0}, Rational(-2, 3));
    CHECK(phi1.derive_along({1, -1, 0}) == expect);

    CHECK_THROWS(p.derive_along({1, 1, 0}));
}

TEST_CASE("derive_along satisfies the Leibniz rule exactly") {
    std::mt19937 rng(11);
    const std::vector<int> x{2, -1, -1};
    for (int trial = 0; trial < 50; ++trial) {
        const LaurentPoly p = random_poly(2, rng);
        const LaurentPoly q = random_poly(2, rng);
        CHECK((p * q).derive_along(x) == p.derive_along(x) * q + p * q.derive_along(x));
    }
}

TEST_CASE("conjugation flips exponents") {
    std::mt19937 rng(3);
    const LaurentPoly p = random_poly(2, rng);
    CHECK(p.conj().conj() == p);
    const TorusPoint a = random_point(2, rng);
    CHECK(std::abs(p.conj().evaluate(a) - std::conj(p.evaluate(a))) < 1e-13);
}
