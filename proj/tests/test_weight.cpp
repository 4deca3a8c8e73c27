#include <doctest.h>

#include <Eigen/Dense>
#include <numbers>
#include <random>

#include "mvop/quadrature.hpp"
#include "mvop/symfun.hpp"
#include "mvop/weight.hpp"

using namespace mvop;
using namespace mvop::weight;

TEST_CASE("the (2,1) weight polynomial matches the tabulated matrix") {
    const PhiPoly W = weight_polynomial(2, 1);
    auto entry = [&](std::vector<int> m, int r, int c) { return W.coefficient(m)(r, c); };
    // [[3, 3f1, 3f2], [3f2, (9 f1 f2 + 3)/4, 3f1], [3f1, 3f2, 3]]
    CHECK(entry({0, 0}, 0, 0) == 3);
    CHECK(entry({1, 0}, 0, 1) == 3);
    CHECK(entry({0, 1}, 0, 2) == 3);
    CHECK(entry({0, 1}, 1, 0) == 3);
    CHECK(entry({1, 1}, 1, 1) == Rational(9, 4));
    CHECK(entry({0, 0}, 1, 1) == Rational(3, 4));
    CHECK(entry({1, 0}, 1, 2) == 3);
    CHECK(entry({1, 0}, 2, 0) == 3);
    CHECK(entry({0, 1}, 2, 1) == 3);
    CHECK(entry({0, 0}, 2, 2) == 3);

    // value at phi = 0
    const RationalMatrix at0 = W.evaluate(std::vector<Rational>{0, 0});
    CHECK(at0 == RationalMatrix::diagonal({3, Rational(3, 4), 3}));
}

TEST_CASE("(3,1) entries forced by the identity value") {
    const PhiPoly W = weight_polynomial(3, 1);
    // all entries equal 4 at phi = (1,1,1)
    const RationalMatrix at1 = W.evaluate(std::vector<Rational>{1, 1, 1});
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) CHECK(at1(r, c) == 4);
    // entry (2,2): 32/9 f1 f3 + 4/9
    CHECK(W.coefficient({1, 0, 1})(1, 1) == Rational(32, 9));
    CHECK(W.coefficient({0, 0, 0})(1, 1) == Rational(4, 9));
    // entry (2,3): 8/3 f2 f3 + 4/3 f1
    CHECK(W.coefficient({0, 1, 1})(1, 2) == Rational(8, 3));
    CHECK(W.coefficient({1, 0, 0})(1, 2) == Rational(4, 3));
}

TEST_CASE("weight identity against the torus side, exactly") {
    for (int n = 1; n <= 3; ++n) {
        const MatrixLaurent psi = spherical::psi0(n);
        const MatrixLaurent lhs = psi.adjoint() * psi;
        const MatrixLaurent rhs = weight_polynomial(n, 1).substitute(spherical::zonal_basis(n));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("flip symmetry of the polynomial part") {
    for (int n = 2; n <= 4; ++n) {
        const PhiPoly W = weight_polynomial(n, 1);
        const int N = n + 1;
        for (const auto& [m, c] : W.terms())
            for (int a = 0; a < N; ++a)
                for (int b = 0; b < N; ++b) CHECK(c(a, b) == c(N - 1 - b, N - 1 - a));
    }
}

TEST_CASE("scalar density equals the squared-difference product") {
    for (int n = 1; n <= 3; ++n) {
        const PhiPoly P = scalar_P(n);
        CHECK(P.substitute(spherical::zonal_basis(n))(0, 0) == quadrature::delta_signed(n));
    }
    // n=1 closed form 4 phi^2 - 4
    PhiPoly expect(1, 1, 1);
    expect += PhiPoly::monomial_scalar(1, {2}, 4);
    expect += PhiPoly::monomial_scalar(1, {0}, -4);
    CHECK(scalar_P(1) == expect);
}

TEST_CASE("interior positivity of the density") {
    // P(phi(a)) = delta(a) carries the parity sign (-1)^{n(n+1)/2}
    for (int n = 1; n <= 4; ++n) {
        const PhiPoly P = scalar_P(n);
        const Rational p0 = P.evaluate(std::vector<Rational>(n, 0))(0, 0);
        const int m = n * (n + 1) / 2;
        CHECK((m % 2 == 0 ? p0 : -p0) > 0);
    }
}

TEST_CASE("weight values: positive definite inside, kernel on the walls") {
    std::mt19937 rng(12);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
    for (int n = 2; n <= 3; ++n) {
        const auto spec = make_weight_spec(n, 1);
        const auto phis = spherical::zonal_basis(n);
        const int N = n + 1;
        auto min_eigenvalue = [&](const TorusPoint& a) {
            std::vector<Complex> phi(n);
            for (int i = 0; i < n; ++i) phi[i] = phis[i].evaluate(a);
            const auto w = spec.W_pol.evaluate(phi);
            Eigen::MatrixXcd m(N, N);
            for (int r = 0; r < N; ++r)
                for (int c = 0; c < N; ++c) m(r, c) = w[r][c];
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
            return es.eigenvalues().minCoeff();
        };
        // generic torus points land in the interior
        for (int t = 0; t < 100; ++t) {
            std::vector<double> th(n);
            for (auto& x : th) x = ang(rng);
            CHECK(min_eigenvalue(TorusPoint(th)) > 0);
        }
        // alcove wall points give a singular weight
        const double two_pi = 2.0 * std::numbers::pi;
        for (int t = 0; t < 20; ++t) {
            // theta on the wall theta_1 = theta_2 (first positive root)
            std::vector<double> th(n);
            th[0] = ang(rng);
            th[1] = th[0];
            for (int i = 2; i < n; ++i) th[i] = ang(rng);
            (void)two_pi;
            CHECK(std::abs(min_eigenvalue(TorusPoint(th))) < 1e-8);
        }
    }
}

TEST_CASE("conjugation on the torus is the column flip") {
    for (int n = 1; n <= 4; ++n) {
        const MatrixLaurent psi = spherical::psi0(n);
        const int N = n + 1;
        RationalMatrix J(N, N);
        for (int i = 0; i < N; ++i) J(i, N - 1 - i) = 1;
        // psi^* = J psi^t, i.e. conj(psi) = psi J
        CHECK(psi.adjoint() == J * psi.transposed());
    }
}

TEST_CASE("domain membership in low rank") {
    // n=1: the interval [-1, 1]
    CHECK(domain_contains({0.0}, 1));
    CHECK(domain_contains({0.93}, 1));
    CHECK(!domain_contains({1.07}, 1));

    // n=2: the deltoid-like region; phi(identity) = (1,1) maps to the cusp
    // (1,0), the opposite flat side crosses the axis at (-1/3, 0)
    CHECK(domain_contains({0.0, 0.0}, 2));
    CHECK(domain_contains({-0.3, 0.0}, 2));
    CHECK(!domain_contains({-0.4, 0.0}, 2));
    CHECK(!domain_contains({0.9, 0.9}, 2));

    // boundary samples satisfy P = 0
    const PhiPoly P = scalar_P(2);
    for (const auto& s : domain_boundary(2, 16)) {
        const auto phi = real_coords_to_phi(s.coords, 2);
        CHECK(std::abs(P.evaluate(phi)[0][0]) < 1e-9);
    }
}

TEST_CASE("images of torus points always lie in the domain") {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
    for (int n = 1; n <= 3; ++n) {
        const auto phis = spherical::zonal_basis(n);
        for (int t = 0; t < 200; ++t) {
            std::vector<double> th(n);
            for (auto& x : th) x = ang(rng);
            TorusPoint a(th);
            std::vector<Complex> phi(n);
            for (int i = 0; i < n; ++i) phi[i] = phis[i].evaluate(a);
            CHECK(domain_contains(phi_to_real_coords(phi, n), n, 2000));
        }
    }
    // and a rank-three point well outside
    CHECK(!domain_contains({0.9, 0.9, 0.9}, 3));
    CHECK(domain_contains({0.0, 0.0, 0.0}, 3));
}

TEST_CASE("measure constants") {
    const auto m1 = measure_constants(1);
    CHECK(m1.c1 == Rational(1, 2));
    CHECK(m1.selberg_s1 == 2);
    CHECK(std::abs(m1.volume - 2.0) < 1e-12);
    const auto m2 = measure_constants(2);
    CHECK(std::abs(m2.volume - 4.0 * std::numbers::pi / 9.0) < 1e-12);
    const auto m3 = measure_constants(3);
    CHECK(std::abs(m3.volume - std::numbers::pi / 9.0) < 1e-12);
}

TEST_CASE("counted volume matches the closed form for n=1,2") {
    CHECK(std::abs(volume_by_counting(1) - 2.0) < 2e-3 * 2.0);
    const double target = 4.0 * std::numbers::pi / 9.0;
    CHECK(std::abs(volume_by_counting(2) - target) < 1e-3 * target);
}

TEST_CASE("k=2 weight is flagged as congruence-class and is consistent") {
    const auto spec = make_weight_spec(1, 2);
    CHECK(spec.provenance == "congruence-class");
    CHECK(spec.size() == 3);
    // W_pol(phi(a)) equals psi* psi on the torus by construction
    const MatrixLaurent sub = spec.W_pol.substitute(spec.phis);
    CHECK(sub == spec.psi_adj_psi);
}
