#include <doctest.h>

#include "mvop/family.hpp"
#include "mvop/quadrature.hpp"

using namespace mvop;

TEST_CASE("degree zero member is the identity with H0 = diag(3,1,3)") {
    const auto fam = family::generate(2, 1, 0);
    REQUIRE(fam.labeled);
    const auto& e = fam.entries.at({0, 0});
    CHECK(e.Q == PhiPoly::identity(2, 3));
    CHECK(e.H == std::vector<Rational>{3, 1, 3});
    CHECK(e.normalization == "column-sum");
}

TEST_CASE("joint labeling splits degree one for (2,1)") {
    const auto fam = family::generate(2, 1, 1);
    REQUIRE(fam.entries.size() == 3);
    const auto& e10 = fam.entries.at({1, 0});
    // eigenvalues from the degree-(1,0) table
    CHECK(e10.gamma_plus == std::vector<Rational>{Rational(28, 3), Rational(38, 3), Rational(26, 3)});
    CHECK(e10.gamma_minus == std::vector<Rational>{Rational(4), Rational(-2, 3), Rational(-10, 3)});
    // each column sums to one at phi = (1,1)
    const auto val = e10.Q.evaluate(std::vector<Rational>{1, 1});
    for (int c = 0; c < 3; ++c) {
        Rational s = 0;
        for (int r = 0; r < 3; ++r) s += val(r, c);
        CHECK(s == 1);
    }
}

TEST_CASE("norm law for (2,1) up to degree two") {
    const auto fam = family::generate(2, 1, 2);
    const auto bottom = spherical::bottom_set(2, 1);
    for (const auto& [d, e] : fam.entries)
        for (size_t s = 0; s < e.H.size(); ++s) {
            const Rational expect =
                Rational(9) / spherical::weyl_dim(spherical::weight_of_degree(bottom[s], d, 2));
            CHECK(e.H[s] == expect);
        }
}

TEST_CASE("family members are mutually orthogonal (2,1)") {
    const auto fam = family::generate(2, 1, 2);
    const auto spec = weight::make_weight_spec(2, 1);
    quadrature::PairingEngine engine(spec.psi_adj_psi, spec.phis);
    for (const auto& [d1, e1] : fam.entries)
        for (const auto& [d2, e2] : fam.entries) {
            const RationalMatrix ip = engine.pair(e1.Q, e2.Q);
            if (d1 == d2) {
                for (int r = 0; r < ip.rows(); ++r)
                    for (int c = 0; c < ip.cols(); ++c)
                        CHECK(ip(r, c) == (r == c ? e1.H[r] : Rational(0)));
            } else {
                CHECK(ip.is_zero());
            }
        }
}

TEST_CASE("labeling works for (1,1) and norms match dimensions") {
    const auto fam = family::generate(1, 1, 2);
    REQUIRE(fam.labeled);
    const auto bottom = spherical::bottom_set(1, 1);
    CHECK(fam.entries.at({0}).H == std::vector<Rational>{2, 2});
    for (const auto& [d, e] : fam.entries)
        for (size_t s = 0; s < e.H.size(); ++s)
            CHECK(e.H[s] ==
                  Rational(4) / spherical::weyl_dim(spherical::weight_of_degree(bottom[s], d, 1)));
}

TEST_CASE("scalar family n=1, k=0 is Chebyshev-like") {
    const auto fam = family::generate(1, 0, 3);
    REQUIRE(fam.labeled);
    // Q_1 = phi, Q_2 = (4 phi^2 - 1)/3 in the unit-value normalization
    CHECK(fam.entries.at({1}).Q == PhiPoly::variable(1, 1));
    PhiPoly q2(1, 1, 1);
    q2 += PhiPoly::monomial_scalar(1, {2}, Rational(4, 3));
    q2 += PhiPoly::monomial_scalar(1, {0}, Rational(-1, 3));
    CHECK(fam.entries.at({2}).Q == q2);
}

TEST_CASE("recurrence reconstructs phi_j Q_d for (2,1)") {
    const auto fam = family::generate(2, 1, 3);
    const auto spec = weight::make_weight_spec(2, 1);
    for (const auto& d : std::vector<std::vector<int>>{{0, 0}, {1, 0}, {1, 1}}) {
        for (int j = 1; j <= 2; ++j) {
            // throws on a nonzero residual
            const auto rc = family::extract_recurrence(fam, spec, d, j);
            int total = 0;
            for (int x : d) total += x;
            if (total >= 1) CHECK(!rc.C.empty());
            CHECK(!rc.A.empty());
        }
    }
}

TEST_CASE("the stacked degree-raising matrix is invertible (2,1)") {
    const auto fam = family::generate(2, 1, 1);
    const auto spec = weight::make_weight_spec(2, 1);
    const int n = 2, N = 3;
    RationalMatrix stacked(n * N, n * N);
    for (int j = 1; j <= n; ++j) {
        const auto rc = family::extract_recurrence(fam, spec, {0, 0}, j);
        for (const auto& [dp, A] : rc.A) {
            int which = -1;
            for (int i = 0; i < n; ++i)
                if (dp[i] == 1) which = i;
            for (int r = 0; r < N; ++r)
                for (int c = 0; c < N; ++c) stacked(which * N + r, (j - 1) * N + c) = A(r, c);
        }
    }
    CHECK(determinant(stacked) != 0);
}

TEST_CASE("scalar recurrence coefficient in the character normalization") {
    // For n=1, k=0 the members are normalized characters; rescaling by the
    // dimension ratio recovers the classical one-half coefficient of the
    // character product chi_1 chi_d = chi_{d+1} + chi_{d-1}.
    const auto fam = family::generate(1, 0, 2);
    const auto spec = weight::make_weight_spec(1, 0);
    const auto rc = family::extract_recurrence(fam, spec, {0}, 1);
    const RationalMatrix& A = rc.A.at({1});
    CHECK(A(0, 0) == 1);  // unit-value normalization: phi * 1 = Q_1
    const Rational dim_ratio = Rational(1) / Rational(2);  // dim V_0 / dim V_1
    CHECK(A(0, 0) * dim_ratio == Rational(1, 2));
}

TEST_CASE("scalar two-variable family comes out as orthogonal blocks") {
    // k = 0, n = 2: degrees are not separated by the operator pair, so the
    // family is an unlabeled graded orthogonal basis.
    const auto fam = family::generate(2, 0, 2);
    REQUIRE(!fam.labeled);
    const auto spec = weight::make_weight_spec(2, 0);
    quadrature::PairingEngine engine(spec.psi_adj_psi, spec.phis);
    std::vector<PhiPoly> all;
    for (const auto& block : fam.blocks)
        for (const auto& q : block) all.push_back(q);
    REQUIRE(all.size() == 6);  // 1 + 2 + 3 monomials
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j)
            CHECK(engine.pair(all[i], all[j])(0, 0) == 0);
}

TEST_CASE("unlabeled blocks for k=2 are orthogonal") {
    for (const auto& [n, expected] : std::vector<std::pair<int, int>>{{1, 6}, {2, 18}}) {
        const auto fam = family::generate(n, 2, 1);
        REQUIRE(!fam.labeled);
        const auto spec = weight::make_weight_spec(n, 2);
        quadrature::PairingEngine engine(spec.psi_adj_psi, spec.phis);
        std::vector<PhiPoly> all;
        for (const auto& block : fam.blocks)
            for (const auto& q : block) all.push_back(q);
        REQUIRE(static_cast<int>(all.size()) == expected);  // N x degrees 0,1
        for (size_t i = 0; i < all.size(); ++i)
            for (size_t j = 0; j < all.size(); ++j) {
                const RationalMatrix ip = engine.pair(all[i], all[j]);
                if (i != j) CHECK(ip(0, 0) == 0);
                if (i == j) CHECK(ip(0, 0) != 0);
            }
    }
}
