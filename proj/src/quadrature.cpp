#include "mvop/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace mvop::quadrature {

namespace {
int g_max_fourier_degree = 512;
}

int max_fourier_degree() { return g_max_fourier_degree; }
void set_max_fourier_degree(int d) { g_max_fourier_degree = d; }

LaurentPoly delta_abs(int n) {
    LaurentPoly p = LaurentPoly::one(n);
    for (int i = 1; i <= n + 1; ++i)
        for (int j = i + 1; j <= n + 1; ++j) {
            LaurentPoly f(n), g(n);
            ExponentVector e(n + 1, 0);
            e[i - 1] = 2;
            f.add_term(e, 1);
            e[i - 1] = 0;
            e[j - 1] = 2;
            f.add_term(e, -1);
            e[j - 1] = 0;
            e[i - 1] = -2;
            g.add_term(e, 1);
            e[i - 1] = 0;
            e[j - 1] = -2;
            g.add_term(e, -1);
            p *= f;
            p *= g;
        }
    return p;
}

LaurentPoly delta_signed(int n) {
    LaurentPoly p = LaurentPoly::one(n);
    for (int i = 1; i <= n + 1; ++i)
        for (int j = i + 1; j <= n + 1; ++j) {
            LaurentPoly f(n);
            ExponentVector e(n + 1, 0);
            e[i - 1] = 2;
            f.add_term(e, 1);
            e[i - 1] = 0;
            e[j - 1] = 2;
            f.add_term(e, -1);
            p *= f;
            p *= f;
        }
    return p;
}

Rational integrate_exact(const LaurentPoly& f, bool with_delta) {
    if (!with_delta) return f.constant_term();
    return (f * delta_abs(f.rank())).constant_term();
}

RationalMatrix integrate_exact(const MatrixLaurent& f, bool with_delta) {
    RationalMatrix r(f.rows(), f.cols());
    const LaurentPoly d = with_delta ? delta_abs(f.rank()) : LaurentPoly::one(f.rank());
    for (int i = 0; i < f.rows(); ++i)
        for (int j = 0; j < f.cols(); ++j)
            r(i, j) = with_delta ? (f(i, j) * d).constant_term() : f(i, j).constant_term();
    return r;
}

GridSpec grid_for(int n, int fourier_degree) {
    if (fourier_degree > g_max_fourier_degree)
        throw GridOverflow("quadrature: Fourier degree " + std::to_string(fourier_degree) +
                           " exceeds cap " + std::to_string(g_max_fourier_degree));
    GridSpec s;
    s.n = n;
    s.points_per_angle = fourier_degree + 1;
    return s;
}

namespace {

template <typename Fn>
void for_each_node(const GridSpec& grid, Fn&& fn) {
    const int n = grid.n, M = grid.points_per_angle;
    std::vector<int> idx(n, 0);
    std::vector<double> angles(n, 0.0);
    const double step = 2.0 * std::numbers::pi / M;
    while (true) {
        for (int i = 0; i < n; ++i) angles[i] = step * idx[i];
        fn(TorusPoint(angles));
        int pos = 0;
        while (pos < n && ++idx[pos] == M) idx[pos++] = 0;
        if (pos == n) break;
    }
}

}  // namespace

Complex integrate_grid(const LaurentPoly& f, bool with_delta, int grid_override) {
    const int n = f.rank();
    const LaurentPoly d = with_delta ? delta_abs(n) : LaurentPoly(n);
    const int deg = f.max_abs_exponent() + (with_delta ? d.max_abs_exponent() : 0);
    GridSpec grid = grid_for(n, grid_override > 0 ? grid_override - 1 : deg);
    Complex sum = 0.0;
    for_each_node(grid, [&](const TorusPoint& a) {
        Complex v = f.evaluate(a);
        if (with_delta) v *= d.evaluate(a);
        sum += v;
    });
    return sum / static_cast<double>(grid.total_nodes());
}

std::vector<std::vector<Complex>> integrate_grid(const MatrixLaurent& f, bool with_delta,
                                                 int grid_override) {
    const int n = f.rank();
    const LaurentPoly d = with_delta ? delta_abs(n) : LaurentPoly(n);
    const int deg = f.max_abs_exponent() + (with_delta ? d.max_abs_exponent() : 0);
    GridSpec grid = grid_for(n, grid_override > 0 ? grid_override - 1 : deg);
    std::vector<std::vector<Complex>> sum(f.rows(), std::vector<Complex>(f.cols(), 0.0));
    for_each_node(grid, [&](const TorusPoint& a) {
        const double w = with_delta ? d.evaluate(a).real() : 1.0;
        for (int i = 0; i < f.rows(); ++i)
            for (int j = 0; j < f.cols(); ++j) sum[i][j] += f(i, j).evaluate(a) * w;
    });
    const double nn = static_cast<double>(grid.total_nodes());
    for (auto& row : sum)
        for (auto& x : row) x /= nn;
    return sum;
}

RationalMatrix inner_product_exact(const PhiPoly& P, const PhiPoly& Q,
                                   const MatrixLaurent& psi_adj_psi,
                                   const std::vector<LaurentPoly>& phis) {
    const int n = psi_adj_psi.rank();
    const MatrixLaurent A = P.substitute(phis);
    const MatrixLaurent B = Q.substitute(phis);
    const MatrixLaurent M = A.adjoint() * psi_adj_psi * B;
    RationalMatrix r = integrate_exact(M, true);
    r *= Rational(1) / factorial(n + 1);
    return r;
}

PairingEngine::PairingEngine(const MatrixLaurent& psi_adj_psi, const std::vector<LaurentPoly>& phis)
    : n_(psi_adj_psi.rank()), N_(psi_adj_psi.rows()), c1_(Rational(1) / factorial(n_ + 1)),
      phis_(phis) {
    const LaurentPoly dabs = delta_abs(n_);
    F_.assign(N_, std::vector<LaurentPoly>(N_, LaurentPoly(n_)));
    for (int s = 0; s < N_; ++s)
        for (int t = 0; t < N_; ++t) F_[s][t] = psi_adj_psi(s, t) * dabs;
    phi_powers_.emplace(std::vector<int>(n_, 0), LaurentPoly::one(n_));
}

const LaurentPoly& PairingEngine::phi_power(const std::vector<int>& g) {
    auto it = phi_powers_.find(g);
    if (it != phi_powers_.end()) return it->second;
    for (int i = 0; i < n_; ++i)
        if (g[i] > 0) {
            std::vector<int> h(g);
            h[i] -= 1;
            LaurentPoly p = phi_power(h) * phis_[i];
            return phi_powers_.emplace(g, std::move(p)).first->second;
        }
    throw std::logic_error("phi_power: negative exponent");
}

Rational PairingEngine::ct(const std::vector<int>& g, int s, int t) {
    const auto key = std::make_tuple(g, s, t);
    auto it = ct_cache_.find(key);
    if (it != ct_cache_.end()) return it->second;
    const LaurentPoly& p = phi_power(g);
    const LaurentPoly& f = F_[s][t];
    Rational sum = 0;
    for (const auto& [e, c] : p.terms()) {
        ExponentVector neg(e);
        for (auto& x : neg) x = -x;
        const Rational fc = f.coefficient(neg);
        if (fc != 0) sum += c * fc;
    }
    ct_cache_.emplace(key, sum);
    return sum;
}

Rational PairingEngine::pairing(const std::vector<int>& mu, int s, const std::vector<int>& mv,
                                int t) {
    std::vector<int> g(mu.rbegin(), mu.rend());  // conj(phi_j) = phi_{n+1-j}
    for (int i = 0; i < n_; ++i) g[i] += mv[i];
    return c1_ * ct(g, s, t);
}

RationalMatrix PairingEngine::pair(const PhiPoly& A, const PhiPoly& B) {
    RationalMatrix out(A.cols(), B.cols());
    for (const auto& [ma, ca] : A.terms())
        for (const auto& [mb, cb] : B.terms())
            for (int s = 0; s < N_; ++s)
                for (int t = 0; t < N_; ++t) {
                    Rational base = 0;
                    bool have = false;
                    for (int p = 0; p < A.cols(); ++p) {
                        if (ca(s, p) == 0) continue;
                        for (int q = 0; q < B.cols(); ++q) {
                            if (cb(t, q) == 0) continue;
                            if (!have) {
                                base = pairing(ma, s, mb, t);
                                have = true;
                            }
                            out(p, q) += ca(s, p) * base * cb(t, q);
                        }
                    }
                }
    return out;
}

std::vector<std::vector<Complex>> inner_product_grid(const PhiPoly& P, const PhiPoly& Q,
                                                     const MatrixLaurent& psi_adj_psi,
                                                     const std::vector<LaurentPoly>& phis,
                                                     int grid_override) {
    const int n = psi_adj_psi.rank();
    const MatrixLaurent A = P.substitute(phis);
    const MatrixLaurent B = Q.substitute(phis);
    const MatrixLaurent M = A.adjoint() * psi_adj_psi * B;
    auto r = integrate_grid(M, true, grid_override);
    const double c1 = 1.0 / to_double(factorial(n + 1));
    for (auto& row : r)
        for (auto& x : row) x *= c1;
    return r;
}

}  // namespace mvop::quadrature
