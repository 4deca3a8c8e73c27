#include "mvop/spherical.hpp"

#include <algorithm>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace mvop::spherical {

Weight fundamental_weight(int i, int n) {
    Weight w(n + 1, 0);
    if (i == 0 || i == n + 1) return w;
    if (i < 0 || i > n + 1) throw std::invalid_argument("fundamental_weight: index out of range");
    for (int j = 0; j < i; ++j) w[j] = 1;
    return w;
}

Weight normalize_weight(Weight w) {
    const int last = w.back();
    if (last != 0)
        for (auto& x : w) x -= last;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] < w[i + 1]) throw std::invalid_argument("weight is not dominant");
    return w;
}

Weight add_weights(const Weight& a, const Weight& b) {
    Weight w(a);
    for (size_t i = 0; i < w.size(); ++i) w[i] += b[i];
    return normalize_weight(std::move(w));
}

namespace {

void for_each_subset(int max, int r, const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int next, int remaining) {
        if (remaining == 0) {
            emit(cur);
            return;
        }
        for (int j = next; j <= max - remaining + 1; ++j) {
            cur.push_back(j);
            rec(j + 1, remaining - 1);
            cur.pop_back();
        }
    };
    rec(1, r);
}

}  // namespace

LaurentPoly zonal_phi(int i, int n) {
    if (i < 1 || i > n) throw std::invalid_argument("zonal_phi: index out of range");
    LaurentPoly p(n);
    for_each_subset(n + 1, i, [&](const std::vector<int>& J) {
        ExponentVector e(n + 1, 0);
        for (int j : J) e[j - 1] = 2;
        p.add_term(std::move(e), 1);
    });
    p *= Rational(1) / binomial(n + 1, i);
    return p;
}

std::vector<LaurentPoly> zonal_basis(int n) {
    std::vector<LaurentPoly> phis;
    phis.reserve(n);
    for (int i = 1; i <= n; ++i) phis.push_back(zonal_phi(i, n));
    return phis;
}

MatrixLaurent psi0(int n) {
    if (n < 1) throw std::invalid_argument("psi0: n must be positive");
    MatrixLaurent m(n + 1, n + 1, n);
    for (int i = 1; i <= n + 1; ++i) {
        for (int col = 1; col <= n + 1; ++col) {
            LaurentPoly entry(n);
            for_each_subset(n + 1, col, [&](const std::vector<int>& J) {
                if (std::find(J.begin(), J.end(), i) == J.end()) return;
                ExponentVector e(n + 1, -1);  // the 1/(t_1...t_{n+1}) factor
                e[i - 1] += 1;
                for (int j : J)
                    if (j != i) e[j - 1] += 2;
                entry.add_term(std::move(e), 1);
            });
            entry *= Rational(1) / binomial(n, col - 1);
            m(i - 1, col - 1) = std::move(entry);
        }
    }
    return m;
}

LaurentPoly det_psi0(int n) {
    const MatrixLaurent m = psi0(n);
    const int sz = n + 1;
    // Leibniz expansion; the matrices are small and entries are short.
    std::vector<int> perm(sz);
    for (int i = 0; i < sz; ++i) perm[i] = i;
    LaurentPoly det(n);
    int sign_swaps;
    do {
        sign_swaps = 0;
        std::vector<int> p(perm);
        for (int i = 0; i < sz; ++i)
            for (int j = i + 1; j < sz; ++j)
                if (p[i] > p[j]) ++sign_swaps;
        LaurentPoly prod = LaurentPoly::one(n);
        for (int i = 0; i < sz; ++i) prod *= m(i, perm[i]);
        det += (sign_swaps % 2 == 0) ? prod : -prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

LaurentPoly det_psi0_closed_form(int n) {
    LaurentPoly prod = LaurentPoly::one(n);
    for (int i = 1; i <= n + 1; ++i)
        for (int j = i + 1; j <= n + 1; ++j) {
            LaurentPoly f(n);
            ExponentVector ei(n + 1, 0), ej(n + 1, 0);
            ei[i - 1] = 2;
            ej[j - 1] = 2;
            f.add_term(std::move(ei), 1);
            f.add_term(std::move(ej), -1);
            prod *= f;
        }
    Rational c = 1;
    for (int m = 1; m <= n + 1; ++m) c /= binomial(n, m - 1);
    prod *= c;
    return prod;
}

std::vector<std::vector<int>> compositions(int k, int parts) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(parts, 0);
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == parts - 1) {
            cur[pos] = remaining;
            out.push_back(cur);
            return;
        }
        for (int v = remaining; v >= 0; --v) {  // largest first -> descending lex
            cur[pos] = v;
            rec(pos + 1, remaining - v);
        }
    };
    if (parts <= 0) throw std::invalid_argument("compositions: parts must be positive");
    rec(0, k);
    return out;
}

std::vector<std::vector<std::vector<int>>> enumerate_M(const std::vector<int>& tau,
                                                       const std::vector<int>& rho) {
    int ktau = 0, krho = 0;
    for (int x : tau) ktau += x;
    for (int x : rho) krho += x;
    if (ktau != krho) throw std::invalid_argument("enumerate_M: totals differ");
    const int m = static_cast<int>(tau.size());

    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> s(m, std::vector<int>(m, 0));  // s[p][q], column p / row q
    std::vector<int> colrem(tau), rowrem(rho);

    std::function<void(int)> rec = [&](int cell) {
        if (cell == m * m) {
            for (int p = 0; p < m; ++p)
                if (colrem[p] != 0) return;
            out.push_back(s);
            return;
        }
        const int q = cell / m;  // row-major over (row q, column p)
        const int p = cell % m;
        const int hi = std::min(colrem[p], rowrem[q]);
        const bool last_in_row = (p == m - 1);
        const bool last_in_col = (q == m - 1);
        for (int v = 0; v <= hi; ++v) {
            if (last_in_row && v != rowrem[q]) continue;
            if (last_in_col && v != colrem[p]) continue;
            s[p][q] = v;
            colrem[p] -= v;
            rowrem[q] -= v;
            rec(cell + 1);
            colrem[p] += v;
            rowrem[q] += v;
            s[p][q] = 0;
        }
    };
    rec(0);
    return out;
}

MatrixLaurent sym_power_psi0(int n, int k) {
    if (k < 1) throw std::invalid_argument("sym_power_psi0: k must be positive");
    const MatrixLaurent g = psi0(n);
    const auto basis = compositions(k, n + 1);
    const int N = static_cast<int>(basis.size());

    std::map<std::vector<int>, int> index;
    for (int i = 0; i < N; ++i) index.emplace(basis[i], i);

    MatrixLaurent out(N, N, n);
    for (int col = 0; col < N; ++col) {
        const auto& tau = basis[col];
        // Expand prod_i (g e_i)^{tau_i} in the monomial basis.
        std::map<std::vector<int>, LaurentPoly> expansion;
        expansion.emplace(std::vector<int>(n + 1, 0), LaurentPoly::one(n));
        for (int i = 1; i <= n + 1; ++i) {
            for (int rep = 0; rep < tau[i - 1]; ++rep) {
                std::map<std::vector<int>, LaurentPoly> next;
                for (const auto& [mono, coef] : expansion) {
                    for (int j = 1; j <= n + 1; ++j) {
                        const LaurentPoly& gji = g(j - 1, i - 1);
                        if (gji.is_zero()) continue;
                        std::vector<int> mono2(mono);
                        mono2[j - 1] += 1;
                        auto it = next.find(mono2);
                        if (it == next.end())
                            next.emplace(std::move(mono2), coef * gji);
                        else
                            it->second += coef * gji;
                    }
                }
                expansion = std::move(next);
            }
        }
        for (const auto& [rho, coef] : expansion) {
            const int row = index.at(rho);
            // Row scaling 1/binom(k,rho) keeps entries rational and the
            // value at the identity equal to one.
            out(row, col) = coef * (Rational(1) / multinomial(k, rho));
        }
    }
    return out;
}

namespace {

void require_dominant(const Weight& w, const char* who) {
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] < w[i + 1]) throw std::invalid_argument(std::string(who) + ": weight is not dominant");
}

}  // namespace

Rational weyl_dim_single(const Weight& w) {
    require_dominant(w, "weyl_dim");
    const int m = static_cast<int>(w.size());
    Rational d = 1;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) d *= Rational(w[i] - w[j] + j - i) / Rational(j - i);
    return d;
}

Rational weyl_dim(const WeightPair& w) { return weyl_dim_single(w.left) * weyl_dim_single(w.right); }

Rational casimir_single(const Weight& w) {
    require_dominant(w, "casimir_eigenvalue");
    const int m = static_cast<int>(w.size());
    Rational total = 0;
    for (int x : w) total += x;
    const Rational shift = total / m;
    // rho in partition coordinates is (m-1, m-2, ..., 0); center both.
    Rational norm = 0, cross = 0;
    Rational rho_mean = Rational(m - 1) / 2;
    for (int i = 0; i < m; ++i) {
        const Rational wc = Rational(w[i]) - shift;
        const Rational rc = Rational(m - 1 - i) - rho_mean;
        norm += wc * wc;
        cross += wc * rc;
    }
    return norm + 2 * cross;
}

Rational casimir_eigenvalue(const WeightPair& w, int sign) {
    const Rational l = casimir_single(w.left);
    const Rational r = casimir_single(w.right);
    return sign >= 0 ? Rational(l + r) : Rational(l - r);
}

std::vector<BottomElement> bottom_set(int n, int k) {
    std::vector<BottomElement> out;
    for (const auto& sigma : compositions(k, n + 1)) {
        Weight left(n + 1, 0), right(n + 1, 0);
        for (int i = 1; i <= n + 1; ++i) {
            if (sigma[i - 1] == 0) continue;
            const Weight wi = fundamental_weight(i, n);
            const Weight wj = fundamental_weight(n + 2 - i, n);
            for (int t = 0; t < n + 1; ++t) {
                left[t] += sigma[i - 1] * wi[t];
                right[t] += sigma[i - 1] * wj[t];
            }
        }
        out.push_back(BottomElement{sigma, WeightPair{normalize_weight(std::move(left)),
                                                      normalize_weight(std::move(right))}});
    }
    return out;
}

WeightPair spherical_weight(int j, int n) {
    return WeightPair{fundamental_weight(j, n), fundamental_weight(n + 1 - j, n)};
}

WeightPair weight_of_degree(const BottomElement& nu, const std::vector<int>& d, int n) {
    Weight left = nu.weight.left, right = nu.weight.right;
    for (int j = 1; j <= n; ++j) {
        if (d[j - 1] == 0) continue;
        const WeightPair eta = spherical_weight(j, n);
        for (int t = 0; t < n + 1; ++t) {
            left[t] += d[j - 1] * eta.left[t];
            right[t] += d[j - 1] * eta.right[t];
        }
    }
    return WeightPair{normalize_weight(std::move(left)), normalize_weight(std::move(right))};
}

TorusPoint barycenter_point(int n) {
    std::vector<double> angles(n);
    for (int j = 1; j <= n; ++j)
        angles[j - 1] = std::numbers::pi * (n - 2 * (j - 1)) / (2.0 * (n + 1));
    return TorusPoint(angles);
}

}  // namespace mvop::spherical
