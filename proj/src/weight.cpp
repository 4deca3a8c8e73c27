#include "mvop/weight.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <numbers>

#include "mvop/symfun.hpp"

namespace mvop::weight {

namespace {

// Entry of the closed-form polynomial part at (n+2-j, k), 1-based, j <= k.
PhiPoly closed_form_entry(int n, int j, int k) {
    PhiPoly entry(n, 1, 1);
    const Rational denom = binomial(n, j - 1) * binomial(n, k - 1);
    const int rmax = std::min(n + 1 - k, j - 1);
    for (int r = 0; r <= rmax; ++r) {
        const Rational c =
            Rational(k + 1 - j + 2 * r) * binomial(n + 1, k + r) * binomial(n + 1, j - 1 - r) / denom;
        std::vector<int> m(n, 0);
        const int a = k + r, b = j - 1 - r;  // phi_0 = phi_{n+1} = 1
        if (a >= 1 && a <= n) m[a - 1] += 1;
        if (b >= 1 && b <= n) m[b - 1] += 1;
        entry += PhiPoly::monomial_scalar(n, m, c);
    }
    return entry;
}

}  // namespace

PhiPoly weight_polynomial(int n, int k) {
    if (k == 0) return PhiPoly::scalar(n, 1);
    if (k == 1) {
        const int N = n + 1;
        PhiPoly W(n, N, N);
        // a + b >= n+2 from the binomial sum, the rest by W_{ab} = W_{n+2-b, n+2-a}.
        for (int a = 1; a <= N; ++a)
            for (int b = 1; b <= N; ++b) {
                int aa = a, bb = b;
                if (a + b < n + 2) {
                    aa = n + 2 - b;
                    bb = n + 2 - a;
                }
                const int jj = n + 2 - aa;  // j <= k by construction
                const PhiPoly e = closed_form_entry(n, jj, bb);
                for (const auto& [m, c] : e.terms()) {
                    RationalMatrix coef(N, N);
                    coef(a - 1, b - 1) = c(0, 0);
                    W.add_term(m, std::move(coef));
                }
            }
        return W;
    }

    // k >= 2: rewrite psi^* psi entry-wise; exact up to congruence.
    const MatrixLaurent psi = spherical::sym_power_psi0(n, k);
    const MatrixLaurent w = psi.adjoint() * psi;
    const int N = w.rows();
    PhiPoly W(n, N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            const PhiPoly e = symfun::express_in_phi(w(i, j));
            for (const auto& [m, c] : e.terms()) {
                RationalMatrix coef(N, N);
                coef(i, j) = c(0, 0);
                W.add_term(m, std::move(coef));
            }
        }
    return W;
}

PhiPoly scalar_P(int n) {
    // Hankel determinant det(p_{i+j-2}(u)) over the u-variables.
    const int m = n + 1;
    std::vector<LaurentPoly> pw(2 * m - 1, LaurentPoly(n));
    for (int s = 0; s < 2 * m - 1; ++s) pw[s] = symfun::power_sum_u(s, n);

    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i;
    LaurentPoly det(n);
    do {
        int inv = 0;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (perm[i] > perm[j]) ++inv;
        LaurentPoly prod = LaurentPoly::one(n);
        for (int i = 0; i < m; ++i) prod *= pw[i + perm[i]];
        det += (inv % 2 == 0) ? prod : -prod;
    } while (std::next_permutation(perm.begin(), perm.end()));

    return symfun::express_in_phi_u(det);
}

WeightSpec make_weight_spec(int n, int k) {
    WeightSpec s;
    s.n = n;
    s.k = k;
    s.W_pol = weight_polynomial(n, k);
    s.P = scalar_P(n);
    s.prefactor_rational = 1;
    for (int j = 1; j <= n; ++j) s.prefactor_rational *= binomial(n + 1, j);
    s.prefactor_rational /= Rational(BigInt(1) << n);  // (2 pi)^{-n}: the 2^{-n} part
    s.provenance = (k <= 1) ? "exact" : "congruence-class";
    if (k == 0)
        s.psi = MatrixLaurent::identity(1, n);
    else
        s.psi = (k == 1) ? spherical::psi0(n) : spherical::sym_power_psi0(n, k);
    s.psi_adj_psi = s.psi.adjoint() * s.psi;
    s.phis = spherical::zonal_basis(n);
    return s;
}

std::vector<Complex> real_coords_to_phi(const std::vector<double>& v, int n) {
    std::vector<Complex> phi(n);
    const int pairs = n / 2;
    for (int i = 0; i < pairs; ++i) {
        const Complex z(v[2 * i], v[2 * i + 1]);
        phi[i] = z;
        phi[n - 1 - i] = std::conj(z);
    }
    if (n % 2 == 1) phi[pairs] = Complex(v[n - 1], 0.0);
    return phi;
}

std::vector<double> phi_to_real_coords(const std::vector<Complex>& phi, int n) {
    std::vector<double> v(n);
    const int pairs = n / 2;
    for (int i = 0; i < pairs; ++i) {
        v[2 * i] = phi[i].real();
        v[2 * i + 1] = phi[i].imag();
    }
    if (n % 2 == 1) v[n - 1] = phi[pairs].real();
    return v;
}

namespace {

// Allocation-free evaluator of the density on the real coordinate slice,
// sign-normalized so that interior values are positive.
struct DomainEvaluator {
    int n;
    int nterms;
    std::vector<int> exps;       // nterms x n
    std::vector<double> coefs;
    double sign0;
    int max_exp;

    explicit DomainEvaluator(int n_) : n(n_) {
        const PhiPoly P = scalar_P(n_);
        nterms = 0;
        max_exp = 0;
        for (const auto& [m, c] : P.terms()) {
            for (int x : m) max_exp = std::max(max_exp, x);
            exps.insert(exps.end(), m.begin(), m.end());
            coefs.push_back(to_double(c(0, 0)));
            ++nterms;
        }
        const Rational p0 = P.evaluate(std::vector<Rational>(n, 0))(0, 0);
        sign0 = p0 >= 0 ? 1.0 : -1.0;
    }

    double signed_value(const double* v) const {
        // coordinates -> conjugate-pair phi values
        Complex phi[8];
        const int pairs = n / 2;
        for (int i = 0; i < pairs; ++i) {
            phi[i] = Complex(v[2 * i], v[2 * i + 1]);
            phi[n - 1 - i] = std::conj(phi[i]);
        }
        if (n % 2 == 1) phi[pairs] = Complex(v[n - 1], 0.0);

        Complex pw[8][8];  // pw[i][e] = phi_i^e
        for (int i = 0; i < n; ++i) {
            pw[i][0] = 1.0;
            for (int e = 1; e <= max_exp; ++e) pw[i][e] = pw[i][e - 1] * phi[i];
        }
        Complex acc = 0.0;
        const int* ep = exps.data();
        for (int t = 0; t < nterms; ++t, ep += n) {
            Complex term = coefs[t];
            for (int i = 0; i < n; ++i) term *= pw[i][ep[i]];
            acc += term;
        }
        return acc.real() * sign0;
    }

    double signed_value(const std::vector<double>& v) const { return signed_value(v.data()); }
};

const DomainEvaluator& evaluator_for(int n) {
    static std::map<int, DomainEvaluator> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, DomainEvaluator(n)).first;
    return it->second;
}

}  // namespace


// Exact membership for n = 3: a coordinate point lies in the image exactly
// when all four roots of z^4 - 4 phi_1 z^3 + 6 phi_2 z^2 - 4 phi_3 z + 1 are
// unimodular, i.e. when F(theta) = 2 cos 2theta - 8(x cos theta - y sin
// theta) + 6 w has four zeros.  Coarse sign scan plus Newton refinement of
// the near-zero extrema.
static bool inside_by_root_count(double x, double y, double w) {
    constexpr int M = 48;
    struct Table {
        double c[M], s[M], c2[M];
    };
    static const Table tab = [] {
        Table t;
        for (int i = 0; i < M; ++i) {
            const double th = 2.0 * std::numbers::pi * i / M;
            t.c[i] = std::cos(th);
            t.s[i] = std::sin(th);
            t.c2[i] = std::cos(2 * th);
        }
        return t;
    }();

    double vals[M];
    for (int i = 0; i < M; ++i)
        vals[i] = 2 * tab.c2[i] - 8 * (x * tab.c[i] - y * tab.s[i]) + 6 * w;

    int changes = 0;
    for (int i = 0; i < M; ++i)
        if ((vals[i] > 0) != (vals[(i + 1) % M] > 0)) ++changes;
    if (changes >= 4) return true;

    // Hidden zero pairs sit at extrema between samples.  The extremum can
    // undershoot the sampled value by at most max|F''| (pi/M)^2 / 2, so
    // clearly-signed candidates never need refining.
    const double slack = (8 + 8 * std::hypot(x, y)) *
                         (std::numbers::pi / M) * (std::numbers::pi / M) / 2;
    auto F = [&](double t) {
        return 2 * std::cos(2 * t) - 8 * (x * std::cos(t) - y * std::sin(t)) + 6 * w;
    };
    int extra = 0;
    const double step = 2.0 * std::numbers::pi / M;
    for (int i = 0; i < M; ++i) {
        const double a = vals[(i + M - 1) % M], b = vals[i], c = vals[(i + 1) % M];
        const bool local_min = (b <= a && b <= c && b > 0 && b < slack);
        const bool local_max = (b >= a && b >= c && b < 0 && b > -slack);
        if (!local_min && !local_max) continue;
        double t = step * i;
        for (int it = 0; it < 24; ++it) {
            double st, ct;
            st = std::sin(t);
            ct = std::cos(t);
            const double s2 = 2 * st * ct, c2 = ct * ct - st * st;
            const double d1 = -4 * s2 + 8 * (x * st + y * ct);
            const double d2 = -8 * c2 + 8 * (x * ct - y * st);
            if (std::abs(d2) < 1e-14) break;
            const double dt = d1 / d2;
            t -= dt;
            if (std::abs(dt) < 1e-14) break;
        }
        const double fe = F(t);
        if ((local_min && fe < 0) || (local_max && fe > 0)) extra += 2;
    }
    return changes + extra >= 4;
}

static double boundary_radius(const DomainEvaluator& ev, const std::vector<double>& dir,
                              double rmax, int coarse_steps);

bool domain_contains(const std::vector<double>& v, int n, int resolution) {
    // Fast reject: all zonal values have modulus at most one.
    for (double x : v)
        if (std::abs(x) > 1.0 + 1e-12) return false;

    // For n = 3 the region is not radially visible everywhere (rays can
    // graze a wall tangentially and re-enter), so the algebraic membership
    // test decides; it is exact for the closure of the component of 0.
    if (n == 3) return inside_by_root_count(v[0], v[1], v[2]);

    const DomainEvaluator& ev = evaluator_for(n);
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm < 1e-14) return true;

    std::vector<double> dir(n);
    for (int i = 0; i < n; ++i) dir[i] = v[i] / norm;
    const double rmax = std::sqrt(double(n)) + 1e-9;
    const double wall = boundary_radius(ev, dir, rmax, resolution);
    return norm <= wall + 1e-9;
}

std::vector<BoundarySample> domain_boundary(int n, int resolution) {
    std::vector<BoundarySample> out;
    const auto phis = spherical::zonal_basis(n);
    const double two_pi = 2.0 * std::numbers::pi;

    // theta(b) = sum_k b_k v^(k), v^(k) = indicator(1..k) - k/(n+1) * ones.
    auto emit = [&](const std::vector<double>& b) {
        std::vector<double> theta(n, 0.0);
        for (int k = 1; k <= n; ++k) {
            for (int j = 0; j < n; ++j) {
                const double vk = (j < k ? 1.0 : 0.0) - double(k) / (n + 1);
                theta[j] += b[k - 1] * vk;
            }
        }
        TorusPoint a{theta};
        std::vector<Complex> phi(n);
        for (int i = 0; i < n; ++i) phi[i] = phis[i].evaluate(a);
        out.push_back(BoundarySample{b, phi_to_real_coords(phi, n)});
    };

    // Faces b_f = 0 (f = 1..n) and the top face sum b = 2 pi.  The free
    // coordinates run over a simplex grid {sum <= 2 pi}.
    std::vector<double> b(n, 0.0);
    std::vector<int> free_idx;
    std::function<void(size_t, double, bool)> walk = [&](size_t pos, double used, bool top) {
        if (pos == free_idx.size()) {
            if (top) b[n - 1] = two_pi - used;
            emit(b);
            return;
        }
        const int steps = resolution;
        for (int i = 0; i <= steps; ++i) {
            const double x = (two_pi - used) * i / steps;
            b[free_idx[pos]] = x;
            walk(pos + 1, used + x, top);
        }
    };
    for (int face = 0; face < n; ++face) {
        std::fill(b.begin(), b.end(), 0.0);
        free_idx.clear();
        for (int j = 0; j < n; ++j)
            if (j != face) free_idx.push_back(j);
        walk(0, 0.0, false);
    }
    std::fill(b.begin(), b.end(), 0.0);
    free_idx.clear();
    for (int j = 0; j + 1 < n; ++j) free_idx.push_back(j);
    walk(0, 0.0, true);
    return out;
}

MeasureConstants measure_constants(int n) {
    MeasureConstants mc;
    mc.c1 = Rational(1) / factorial(n + 1);
    mc.selberg_s1 = factorial(n + 1);
    double binom_prod = 1.0;
    for (int k = 1; k <= n; ++k) binom_prod *= to_double(binomial(n + 1, k));
    mc.volume = std::pow(2.0 * std::sqrt(std::numbers::pi), n) /
                (std::tgamma(1.0 + n / 2.0) * binom_prod);
    return mc;
}

// First radius along the given direction at which the density vanishes.
// A wall is either a sign change (simple vanishing: one colliding root
// pair) or a quadratic touch (two conjugate pairs colliding at once, which
// happens for n >= 3): both are detected, the former by bisection, the
// latter from the parabola through a local-minimum triple.
static double boundary_radius(const DomainEvaluator& ev, const std::vector<double>& dir,
                              double rmax, int coarse_steps) {
    const int n = static_cast<int>(dir.size());
    std::vector<double> p(n);
    auto value = [&](double r) {
        for (int j = 0; j < n; ++j) p[j] = r * dir[j];
        return ev.signed_value(p);
    };
    const double step = rmax / coarse_steps;
    double prev2 = -1.0, prev = value(step);
    if (prev <= 0) return step;
    for (int i = 2; i <= coarse_steps; ++i) {
        const double r = step * i;
        const double cur = value(r);
        if (cur <= 0) {  // simple crossing: bisect
            double lo = r - step, hi = r;
            for (int it = 0; it < 50; ++it) {
                const double mid = 0.5 * (lo + hi);
                (value(mid) > 0 ? lo : hi) = mid;
            }
            return 0.5 * (lo + hi);
        }
        if (prev2 >= 0 && prev <= prev2 && prev <= cur) {
            // Local minimum triple around r - step: refine the minimum and
            // decide between a quadratic touch (wall) and a near-miss dip.
            double l = r - 2 * step, m = r - step, h = r;
            double fl = prev2, fm = prev, fh = cur;
            for (int it = 0; it < 40 && h - l > 1e-13; ++it) {
                const double q1 = 0.5 * (l + m), q2 = 0.5 * (m + h);
                const double f1 = value(q1), f2 = value(q2);
                if (f1 <= fm && f1 <= f2) {
                    h = m;
                    fh = fm;
                    m = q1;
                    fm = f1;
                } else if (f2 <= fm) {
                    l = m;
                    fl = fm;
                    m = q2;
                    fm = f2;
                } else {
                    l = q1;
                    fl = f1;
                    h = q2;
                    fh = f2;
                }
            }
            (void)fl;
            (void)fh;
            if (fm <= 1e-7 * (std::abs(ev.sign0) + std::abs(value(0.0)) + 1.0)) return m;
            // otherwise a dip that stays positive: keep marching
        }
        prev2 = prev;
        prev = cur;
    }
    return rmax;
}

double volume_by_counting(int n, int base_resolution, int subdivision) {
    if (base_resolution <= 0 && n != 3) base_resolution = (n <= 1) ? 4096 : 512;
    if (subdivision <= 0) subdivision = (n <= 1) ? 4 : 12;
    const DomainEvaluator& ev = evaluator_for(n);

    // |dphi_1 ^ ... ^ dphi_n| restricted to the real form is 2 dx dy per
    // conjugate coordinate pair.
    double measure_factor = 1.0;
    for (int i = 0; i < n / 2; ++i) measure_factor *= 2.0;

    if (n == 1) {
        const double rmax = 1.0 + 1e-9;
        return boundary_radius(ev, {1.0}, rmax, base_resolution) +
               boundary_radius(ev, {-1.0}, rmax, base_resolution);
    }

    if (n == 3) {
        // Exact membership by root counting; two-level 0/1 count.
        const int R0 = base_resolution > 0 ? base_resolution : 128;
        const double h = 2.0 / R0;
        std::vector<uint8_t> in0(size_t(R0) * R0 * R0);
        auto at0 = [&](int i, int j, int k) -> uint8_t& {
            return in0[(size_t(k) * R0 + j) * R0 + i];
        };
        auto centre = [&](int k) { return -1.0 + (k + 0.5) * h; };
        for (int k = 0; k < R0; ++k)
            for (int j = 0; j < R0; ++j)
                for (int i = 0; i < R0; ++i)
                    at0(i, j, k) = inside_by_root_count(centre(i), centre(j), centre(k)) ? 1 : 0;

        const int S = subdivision;
        const double cell_vol = h * h * h;
        double volume = 0.0;
        for (int k = 0; k < R0; ++k)
            for (int j = 0; j < R0; ++j)
                for (int i = 0; i < R0; ++i) {
                    bool mixed = false;
                    for (int dk = -1; dk <= 1 && !mixed; ++dk)
                        for (int dj = -1; dj <= 1 && !mixed; ++dj)
                            for (int di = -1; di <= 1 && !mixed; ++di) {
                                const int ii = i + di, jj = j + dj, kk = k + dk;
                                if (ii < 0 || jj < 0 || kk < 0 || ii >= R0 || jj >= R0 || kk >= R0)
                                    continue;
                                if (at0(ii, jj, kk) != at0(i, j, k)) mixed = true;
                            }
                    if (!mixed) {
                        if (at0(i, j, k)) volume += cell_vol;
                        continue;
                    }
                    long hits = 0;
                    for (int sk = 0; sk < S; ++sk)
                        for (int sj = 0; sj < S; ++sj)
                            for (int si = 0; si < S; ++si) {
                                const double xx = -1.0 + (i + (si + 0.5) / S) * h;
                                const double yy = -1.0 + (j + (sj + 0.5) / S) * h;
                                const double zz = -1.0 + (k + (sk + 0.5) / S) * h;
                                if (inside_by_root_count(xx, yy, zz)) ++hits;
                            }
                    volume += cell_vol * double(hits) / double(S) / double(S) / double(S);
                }
        return volume * measure_factor;
    }

    // Walls carry either a sign change or an even-order touch (P > 0 on both
    // sides).  An edge between positive values V_a, V_b crosses a quadratic
    // wall exactly when the midpoint value is at most (V_a + V_b)/4, which
    // separates crossing from same-side edges without any absolute scale.
    auto edge_blocked = [&](double va, double vb, double vmid) {
        if (va <= 0 || vb <= 0) return true;
        return vmid <= 0 || vmid <= 0.25 * (va + vb);
    };

    const int R = base_resolution;
    const double h = 2.0 / R;
    std::vector<long> strides(n, 1);
    long cells = 1;
    for (int i = 0; i < n; ++i) {
        strides[i] = cells;
        cells *= R;
    }

    std::vector<float> val(cells);
    std::vector<double> center(n);
    for (long c = 0; c < cells; ++c) {
        long rest = c;
        for (int i = n - 1; i >= 0; --i) {
            const long k = rest / strides[i];
            rest %= strides[i];
            center[i] = -1.0 + (k + 0.5) * h;
        }
        val[c] = static_cast<float>(ev.signed_value(center));
    }

    // Component of the origin, with blocked edges.
    std::vector<uint8_t> inside(cells, 0);
    long origin = 0;
    for (int i = 0; i < n; ++i) origin += strides[i] * (R / 2);
    std::deque<long> queue;
    if (val[origin] > 0) {
        inside[origin] = 1;
        queue.push_back(origin);
    }
    std::vector<double> mid(n);
    while (!queue.empty()) {
        const long c = queue.front();
        queue.pop_front();
        std::vector<int> idx(n);
        long rest = c;
        for (int i = n - 1; i >= 0; --i) {
            idx[i] = static_cast<int>(rest / strides[i]);
            rest %= strides[i];
        }
        for (int i = 0; i < n; ++i) {
            for (int dir = -1; dir <= 1; dir += 2) {
                if ((dir < 0 && idx[i] == 0) || (dir > 0 && idx[i] == R - 1)) continue;
                const long nb = c + dir * strides[i];
                if (inside[nb] || val[nb] <= 0) continue;
                for (int t = 0; t < n; ++t) mid[t] = -1.0 + (idx[t] + 0.5) * h;
                mid[i] += dir * 0.5 * h;
                if (edge_blocked(val[c], val[nb], ev.signed_value(mid))) continue;
                inside[nb] = 1;
                queue.push_back(nb);
            }
        }
    }

    auto is_boundary = [&](long c) {
        for (int i = 0; i < n; ++i) {
            const int k = static_cast<int>((c / strides[i]) % R);
            if (k == 0 || k == R - 1) return inside[c] != 0;
        }
        std::vector<int> off(n, -1);
        while (true) {
            long nb = c;
            for (int i = 0; i < n; ++i) nb += off[i] * strides[i];
            if (inside[nb] != inside[c]) return true;
            int pos = 0;
            while (pos < n && ++off[pos] == 2) off[pos++] = -1;
            if (pos == n) break;
        }
        return false;
    };

    // Refinement of a mixed cell: a local flood over the subcell grid with
    // the same edge rule, seeded from faces shared with inside neighbours.
    const int S = subdivision;
    long subcells = 1;
    std::vector<long> substrides(n, 1);
    for (int i = 0; i < n; ++i) {
        substrides[i] = subcells;
        subcells *= S;
    }
    std::vector<float> sval(subcells);
    std::vector<uint8_t> sin_side(subcells);
    std::vector<double> at(n);

    const double cell_vol = std::pow(h, n);
    double volume = 0.0;

    for (long c = 0; c < cells; ++c) {
        const bool mixed = is_boundary(c);
        if (!mixed) {
            if (inside[c]) volume += cell_vol;
            continue;
        }
        std::vector<int> idx(n);
        std::vector<double> corner(n);
        long rest = c;
        for (int i = n - 1; i >= 0; --i) {
            const long k = rest / strides[i];
            rest %= strides[i];
            idx[i] = static_cast<int>(k);
            corner[i] = -1.0 + k * h;
        }
        const double hs = h / S;

        for (long s = 0; s < subcells; ++s) {
            long r2 = s;
            for (int i = n - 1; i >= 0; --i) {
                const long k = r2 / substrides[i];
                r2 %= substrides[i];
                at[i] = corner[i] + (k + 0.5) * hs;
            }
            sval[s] = static_cast<float>(ev.signed_value(at));
            sin_side[s] = 0;
        }

        // Seeds: boundary-layer subcells facing an inside neighbour cell.
        std::deque<long> sq;
        for (int i = 0; i < n; ++i) {
            for (int dir = -1; dir <= 1; dir += 2) {
                if ((dir < 0 && idx[i] == 0) || (dir > 0 && idx[i] == R - 1)) continue;
                const long nb = c + dir * strides[i];
                if (!inside[nb]) continue;
                // all subcells on that face with positive value
                std::vector<int> si(n, 0);
                while (true) {
                    si[i] = (dir < 0) ? 0 : S - 1;
                    long s = 0;
                    for (int t = 0; t < n; ++t) s += substrides[t] * si[t];
                    if (sval[s] > 0 && !sin_side[s]) {
                        sin_side[s] = 1;
                        sq.push_back(s);
                    }
                    int pos = 0;
                    while (pos < n && (pos == i || ++si[pos] == S)) {
                        if (pos != i) si[pos] = 0;
                        ++pos;
                    }
                    if (pos == n) break;
                }
            }
        }

        while (!sq.empty()) {
            const long s = sq.front();
            sq.pop_front();
            std::vector<int> si(n);
            long r2 = s;
            for (int i = n - 1; i >= 0; --i) {
                si[i] = static_cast<int>(r2 / substrides[i]);
                r2 %= substrides[i];
            }
            for (int i = 0; i < n; ++i) {
                for (int dir = -1; dir <= 1; dir += 2) {
                    const int k = si[i] + dir;
                    if (k < 0 || k >= S) continue;
                    const long nb = s + dir * substrides[i];
                    if (sin_side[nb] || sval[nb] <= 0) continue;
                    for (int t = 0; t < n; ++t) at[t] = corner[t] + (si[t] + 0.5) * hs;
                    at[i] += dir * 0.5 * hs;
                    if (edge_blocked(sval[s], sval[nb], ev.signed_value(at))) continue;
                    sin_side[nb] = 1;
                    sq.push_back(nb);
                }
            }
        }

        long hits = 0;
        for (long s = 0; s < subcells; ++s) hits += sin_side[s];
        volume += cell_vol * double(hits) / double(subcells);
    }
    return volume * measure_factor;
}

}  // namespace mvop::weight
