#include "mvop/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "mvop/commutant.hpp"
#include "mvop/family.hpp"
#include "mvop/quadrature.hpp"
#include "mvop/symfun.hpp"

namespace mvop::verify {

namespace {

struct Runner {
    std::ostream& os;
    bool all_ok = true;

    void run(const std::string& name, const std::function<bool(std::string&)>& check) {
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        std::string detail;
        try {
            ok = check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        os << (ok ? "[PASS] " : "[FAIL] ") << name;
        if (!detail.empty()) os << " -- " << detail;
        os << "  (" << std::fixed << std::setprecision(2) << dt << " s)\n";
        os.unsetf(std::ios::fixed);
        all_ok = all_ok && ok;
    }
};

TorusPoint random_point(int n, std::mt19937& rng) {
    std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
    std::vector<double> th(n);
    for (auto& x : th) x = ang(rng);
    return TorusPoint(th);
}

// ---- criterion 1: Selberg constant -------------------------------------

bool check_selberg(std::string& detail) {
    for (int n = 1; n <= 3; ++n) {
        const Rational exact = quadrature::integrate_exact(LaurentPoly::one(n), true);
        if (exact != factorial(n + 1)) {
            detail = "exact value mismatch at n=" + std::to_string(n);
            return false;
        }
        const Complex approx = quadrature::integrate_grid(LaurentPoly::one(n), true);
        const double target = to_double(factorial(n + 1));
        if (std::abs(approx.real() - target) / target > 1e-10 || std::abs(approx.imag()) > 1e-10) {
            detail = "grid value mismatch at n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

// ---- criterion 2: volumes ----------------------------------------------

bool check_volumes(std::string& detail) {
    const double targets[] = {2.0, 4.0 * std::numbers::pi / 9.0, std::numbers::pi / 9.0};
    for (int n = 1; n <= 3; ++n) {
        const auto mc = weight::measure_constants(n);
        if (std::abs(mc.volume - targets[n - 1]) > 1e-12 * targets[n - 1]) {
            detail = "closed form mismatch at n=" + std::to_string(n);
            return false;
        }
        const double counted = weight::volume_by_counting(n);
        const double rel = std::abs(counted - targets[n - 1]) / targets[n - 1];
        if (rel > 1e-3) {
            std::ostringstream ss;
            ss << "counted volume off by " << rel << " at n=" << n;
            detail = ss.str();
            return false;
        }
    }
    return true;
}

// ---- criterion 3: weight identity --------------------------------------

bool check_weight_identity(std::string& detail) {
    for (int n = 1; n <= 3; ++n) {
        const MatrixLaurent psi = spherical::psi0(n);
        const MatrixLaurent lhs = psi.adjoint() * psi;
        const MatrixLaurent rhs =
            weight::weight_polynomial(n, 1).substitute(spherical::zonal_basis(n));
        if (!(lhs == rhs)) {
            detail = "exact identity fails at n=" + std::to_string(n);
            return false;
        }
    }
    std::mt19937 rng(2024);
    for (int n = 4; n <= 5; ++n) {
        const MatrixLaurent psi = spherical::psi0(n);
        const PhiPoly W = weight::weight_polynomial(n, 1);
        const auto phis = spherical::zonal_basis(n);
        for (int t = 0; t < 200; ++t) {
            const TorusPoint a = random_point(n, rng);
            const auto mpsi = psi.evaluate(a);
            std::vector<Complex> phival(n);
            for (int i = 0; i < n; ++i) phival[i] = phis[i].evaluate(a);
            const auto wval = W.evaluate(phival);
            const int N = n + 1;
            for (int r = 0; r < N; ++r)
                for (int c = 0; c < N; ++c) {
                    Complex acc = 0.0;
                    for (int i = 0; i < N; ++i) acc += std::conj(mpsi[i][r]) * mpsi[i][c];
                    if (std::abs(acc - wval[r][c]) > 1e-10) {
                        detail = "numeric identity fails at n=" + std::to_string(n);
                        return false;
                    }
                }
        }
    }
    return true;
}

// ---- criterion 4: scalar density ---------------------------------------

PhiPoly quartic_reference() {
    // -x^2 y^2 + 4x^3 + 4y^3 - 18xy + 27 evaluated at x = 3 phi_1, y = 3 phi_2,
    // then negated to match P(phi(a)) = delta(a).
    PhiPoly q(2, 1, 1);
    q += PhiPoly::monomial_scalar(2, {2, 2}, 81);
    q += PhiPoly::monomial_scalar(2, {3, 0}, -108);
    q += PhiPoly::monomial_scalar(2, {0, 3}, -108);
    q += PhiPoly::monomial_scalar(2, {1, 1}, 162);
    q += PhiPoly::monomial_scalar(2, {0, 0}, -27);
    return q;
}

PhiPoly sextic_reference() {
    PhiPoly q(3, 1, 1);
    auto add = [&](std::vector<int> m, long c) { q += PhiPoly::monomial_scalar(3, m, c); };
    add({2, 1, 0}, 13824);
    add({1, 0, 1}, -3072);
    add({3, 0, 3}, -16384);
    add({2, 3, 0}, -13824);
    add({2, 0, 2}, -1536);
    add({0, 3, 2}, -13824);
    add({0, 1, 2}, 13824);
    add({4, 0, 0}, -6912);
    add({0, 2, 0}, -4608);
    add({2, 2, 2}, 9216);
    add({3, 1, 1}, 27648);
    add({1, 1, 3}, 27648);
    add({1, 2, 1}, -46080);
    add({0, 4, 0}, 20736);
    add({0, 0, 4}, -6912);
    add({0, 0, 0}, 256);
    return q;
}

bool check_scalar_density(std::string& detail) {
    // the defining pin: P(phi(a)) equals the squared-difference product
    for (int n = 1; n <= 3; ++n) {
        const PhiPoly P = weight::scalar_P(n);
        const MatrixLaurent sub = P.substitute(spherical::zonal_basis(n));
        if (!(sub(0, 0) == quadrature::delta_signed(n))) {
            detail = "P(phi(a)) != delta(a) at n=" + std::to_string(n);
            return false;
        }
    }
    if (weight::scalar_P(2) != quartic_reference()) {
        detail = "quartic mismatch";
        return false;
    }
    if (weight::scalar_P(3) != sextic_reference()) {
        detail = "sextic mismatch";
        return false;
    }
    return true;
}

// ---- criterion 5: norm law ---------------------------------------------

bool norm_law_case(int n, int k, int maxdeg, std::string& detail) {
    const auto fam = family::generate(n, k, maxdeg);
    const auto spec = weight::make_weight_spec(n, k);
    const auto bottom = spherical::bottom_set(n, k);
    const Rational dimmu2 = [&] {
        Rational d = 0;
        // dim S^k(C^{n+1}) = binom(n+k, k)
        d = binomial(n + k, k);
        return d * d;
    }();

    // H_d matches the dimension quotient.
    for (const auto& [d, e] : fam.entries) {
        for (size_t s = 0; s < e.H.size(); ++s) {
            const Rational expect =
                dimmu2 / spherical::weyl_dim(spherical::weight_of_degree(bottom[s], d, n));
            if (e.H[s] != expect) {
                detail = "H mismatch at (" + std::to_string(n) + "," + std::to_string(k) + ")";
                return false;
            }
        }
    }
    // Full pairwise orthogonality of distinct members.
    quadrature::PairingEngine engine(spec.psi_adj_psi, spec.phis);
    std::vector<const family::Entry*> all;
    std::vector<std::vector<int>> keys;
    for (const auto& [d, e] : fam.entries) {
        all.push_back(&e);
        keys.push_back(d);
    }
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = 0; j < all.size(); ++j) {
            const RationalMatrix ip = engine.pair(all[i]->Q, all[j]->Q);
            if (i != j) {
                if (!ip.is_zero()) {
                    detail = "off-diagonal Gram block is nonzero";
                    return false;
                }
            } else {
                for (int r = 0; r < ip.rows(); ++r)
                    for (int c = 0; c < ip.cols(); ++c) {
                        const Rational expect = (r == c) ? all[i]->H[r] : Rational(0);
                        if (ip(r, c) != expect) {
                            detail = "diagonal Gram block is not H_d";
                            return false;
                        }
                    }
            }
        }
    return true;
}

bool check_norm_law(std::string& detail) {
    return norm_law_case(2, 1, 3, detail) && norm_law_case(3, 1, 2, detail);
}

// ---- criterion 6: operator tables --------------------------------------

bool check_operator_tables(std::string& detail) {
    for (int n = 2; n <= 3; ++n) {
        const auto ref = diffops::reference_tables(n);
        const auto G = diffops::second_order_symbol(n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (G[a][b] != ref.G[a][b]) {
                    detail = "G mismatch at n=" + std::to_string(n);
                    return false;
                }
        const auto LC = diffops::derive_first_order_data(n);
        for (int a = 0; a < n; ++a) {
            if (LC[a].L != ref.L[a]) {
                detail = "L mismatch at n=" + std::to_string(n) + ", k=" + std::to_string(a + 1);
                return false;
            }
            if (LC[a].C != ref.C[a]) {
                detail = "C mismatch at n=" + std::to_string(n) + ", k=" + std::to_string(a + 1);
                return false;
            }
        }
        const auto U = diffops::derive_upsilon(n);
        for (int a = 0; a < n; ++a)
            if (U[a] != ref.Upsilon[a]) {
                detail = "Upsilon mismatch at n=" + std::to_string(n);
                return false;
            }
        const std::vector<int> zero(n, 0);
        if (diffops::eigenvalue_diag(n, zero, +1) != ref.Gamma0 ||
            diffops::eigenvalue_diag(n, zero, -1) != ref.GammaMinus0) {
            detail = "Gamma0 mismatch at n=" + std::to_string(n);
            return false;
        }
        // closed-form eigenvalue tables on a few degrees
        for (const auto& d : {std::vector<int>(n, 0), std::vector<int>(n, 1),
                              std::vector<int>(n, 2)}) {
            if (diffops::eigenvalue_diag(n, d, +1) != ref.gamma_plus(d) ||
                diffops::eigenvalue_diag(n, d, -1) != ref.gamma_minus(d)) {
                detail = "eigenvalue table mismatch at n=" + std::to_string(n);
                return false;
            }
        }
    }
    return true;
}

// ---- criterion 7: eigenfunction property --------------------------------

bool check_eigenfunctions(std::string& detail) {
    // (2,1) to degree three and (3,1) to degree two
    for (const auto& [n, maxdeg] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}}) {
        const auto fam = family::generate(n, 1, maxdeg);
        const auto ops = diffops::build_operators(n, maxdeg);
        for (const auto& [d, e] : fam.entries) {
            const PhiPoly lp = diffops::apply(ops.plus, e.Q);
            const PhiPoly lm = diffops::apply(ops.minus, e.Q);
            const PhiPoly rp = e.Q * RationalMatrix::diagonal(e.gamma_plus);
            const PhiPoly rm = e.Q * RationalMatrix::diagonal(e.gamma_minus);
            if (lp != rp || lm != rm) {
                detail = "eigen relation fails at n=" + std::to_string(n);
                return false;
            }
        }
    }
    // commutation on random degree <= 3 polynomials, both tabulated ranks
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> num(-6, 6);
    for (int nn = 2; nn <= 3; ++nn) {
        const auto o = diffops::build_operators(nn, 1);
        const int N = nn + 1;
        for (int trial = 0; trial < 3; ++trial) {
            PhiPoly Q(nn, N, N);
            for (const auto& m : {std::vector<int>(nn, 0), std::vector<int>(nn, 1)}) {
                RationalMatrix c(N, N);
                for (int i = 0; i < N; ++i)
                    for (int j = 0; j < N; ++j) c(i, j) = num(rng);
                Q.add_term(m, std::move(c));
            }
            std::vector<int> m3(nn, 0);
            m3[trial % nn] = 3;
            RationalMatrix c(N, N);
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) c(i, j) = num(rng);
            Q.add_term(m3, std::move(c));
            const PhiPoly ab = diffops::apply(o.plus, diffops::apply(o.minus, Q));
            const PhiPoly ba = diffops::apply(o.minus, diffops::apply(o.plus, Q));
            if (ab != ba) {
                detail = "operators do not commute at n=" + std::to_string(nn);
                return false;
            }
        }
    }
    return true;
}

// ---- criterion 8: irreducibility ---------------------------------------

bool check_irreducibility(std::string& detail) {
    struct Case {
        int n, k, expect;
    };
    for (const Case c : {Case{2, 1, 1}, Case{3, 1, 1}, Case{1, 1, 2}}) {
        const auto spec = weight::make_weight_spec(c.n, c.k);
        const auto rep = commutant::analyze(spec, spec.size() * spec.size() + 1, 0);
        const auto ex = commutant::analyze_exact(spec);
        if (rep.dim_AW != c.expect || ex.dim_AW != c.expect) {
            detail = "commutant dimension wrong at n=" + std::to_string(c.n);
            return false;
        }
        const bool want_irr = c.expect == 1;
        if ((rep.verdict == "irreducible") != want_irr) {
            detail = "verdict wrong at n=" + std::to_string(c.n);
            return false;
        }
    }
    for (int n = 2; n <= 4; ++n)
        if (!commutant::structured_checks(n)) {
            detail = "structured checks fail at n=" + std::to_string(n);
            return false;
        }
    return true;
}

// ---- criterion 9: symmetric function suite -------------------------------

bool check_symfun_suite(std::string& detail) {
    for (int n = 1; n <= 4; ++n)
        for (int N = 0; N <= 2 * n + 2; ++N)
            for (int a = 0; a <= N; ++a)
                for (int b = a; b <= N; ++b)
                    if (!symfun::check_telescoping(N, a, b, n)) {
                        detail = "telescoping fails";
                        return false;
                    }
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= n + 1; ++m)
            for (int k = 1; k <= n + 1; ++k)
                for (int i = 1; i <= n + 1; ++i)
                    if (!symfun::check_reduce_difference(m, k, i, n)) {
                        detail = "difference reduction fails";
                        return false;
                    }
    // Euler identity r e_r = sum_i u_i e^{(i)}_{r-1}
    for (int n = 1; n <= 5; ++n)
        for (int r = 1; r <= n + 1; ++r) {
            FreePoly lhs = symfun::elementary_free(r, n) * Rational(r);
            FreePoly rhs(n + 1);
            for (int i = 1; i <= n + 1; ++i)
                rhs += FreePoly::variable(n + 1, i) * symfun::e_derived_free(i, r - 1, n);
            if (lhs != rhs) {
                detail = "Euler identity fails";
                return false;
            }
        }
    // Vandermonde summation via the composition-matrix enumeration
    for (int n = 1; n <= 3; ++n)
        for (int k = 1; k <= 4; ++k) {
            const auto comps = spherical::compositions(k, n + 1);
            for (const auto& tau : comps)
                for (const auto& rho : comps) {
                    Rational sum = 0;
                    for (const auto& s : spherical::enumerate_M(tau, rho)) {
                        Rational prod = 1;
                        for (size_t p = 0; p < tau.size(); ++p) {
                            int colsum = 0;
                            std::vector<int> col(s[p].size());
                            for (size_t q = 0; q < s[p].size(); ++q) {
                                col[q] = s[p][q];
                                colsum += s[p][q];
                            }
                            prod *= multinomial(colsum, col);
                        }
                        sum += prod;
                    }
                    if (sum != multinomial(k, rho)) {
                        detail = "Vandermonde summation fails";
                        return false;
                    }
                }
        }
    return true;
}

// ---- criterion 10: barycenter and determinant ----------------------------

bool check_barycenter(std::string& detail) {
    for (int n = 1; n <= 4; ++n) {
        const TorusPoint t0 = spherical::barycenter_point(n);
        for (int i = 1; i <= n; ++i)
            if (std::abs(spherical::zonal_phi(i, n).evaluate(t0)) > 1e-12) {
                detail = "zonal value at the barycenter is nonzero";
                return false;
            }
        if (!(spherical::det_psi0(n) == spherical::det_psi0_closed_form(n))) {
            detail = "determinant closed form fails at n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

}  // namespace

bool run_suite(std::ostream& os) {
    Runner r{os};
    r.run("1. Selberg constant: mean of |delta| equals (n+1)! for n=1..3", check_selberg);
    r.run("2. domain volumes: 2, 4pi/9, pi/9 and counted volumes to 1e-3", check_volumes);
    r.run("3. weight identity: psi0* psi0 equals W_pol(phi)", check_weight_identity);
    r.run("4. scalar density: Hankel determinant matches the quartic/sextic", check_scalar_density);
    r.run("5. norm law: Gram blocks are diag dim(V_mu)^2/dim(V_lambda)", check_norm_law);
    r.run("6. operator tables: derived G, L, C, Upsilon, Gamma match n=2,3", check_operator_tables);
    r.run("7. eigenfunctions: D+- Q_d = Q_d Gamma+-, operators commute", check_eigenfunctions);
    r.run("8. irreducibility: commutant trivial for n=2,3; 2-dim for n=1", check_irreducibility);
    r.run("9. symmetric function identities: telescoping, Euler, Vandermonde", check_symfun_suite);
    r.run("10. barycenter maps to 0; determinant closed form", check_barycenter);
    return r.all_ok;
}

}  // namespace mvop::verify
