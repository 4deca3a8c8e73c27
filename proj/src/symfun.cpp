#include "mvop/symfun.hpp"

#include <algorithm>
#include <functional>

namespace mvop::symfun {

namespace {

void subsets_rec(int next, int max, int remaining, std::vector<int>& cur,
                 const std::function<void(const std::vector<int>&)>& emit) {
    if (remaining == 0) {
        emit(cur);
        return;
    }
    for (int j = next; j <= max - remaining + 1; ++j) {
        cur.push_back(j);
        subsets_rec(j + 1, max, remaining - 1, cur, emit);
        cur.pop_back();
    }
}

void for_each_subset(int m, int r, const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> cur;
    subsets_rec(1, m, r, cur, emit);
}

}  // namespace

LaurentPoly elementary_u(int r, int n) {
    if (r < 0 || r > n + 1) throw std::invalid_argument("elementary_u: index out of range");
    LaurentPoly p(n);
    for_each_subset(n + 1, r, [&](const std::vector<int>& J) {
        ExponentVector e(n + 1, 0);
        for (int j : J) e[j - 1] = 1;
        p.add_term(std::move(e), 1);
    });
    return p;
}

LaurentPoly power_sum_u(int k, int n) {
    if (k < 0) throw std::invalid_argument("power_sum_u: negative index");
    LaurentPoly p(n);
    if (k == 0) return LaurentPoly::constant(n, n + 1);
    for (int j = 1; j <= n + 1; ++j) {
        ExponentVector e(n + 1, 0);
        e[j - 1] = k;
        p.add_term(std::move(e), 1);
    }
    return p;
}

FreePoly elementary_free(int r, int n) {
    const int m = n + 1;
    if (r < 0 || r > m) return FreePoly::zero(m);
    if (r == 0) return FreePoly::constant(m, 1);
    FreePoly p(m);
    for_each_subset(m, r, [&](const std::vector<int>& J) {
        std::vector<int> e(m, 0);
        for (int j : J) e[j - 1] = 1;
        p.add_term(std::move(e), 1);
    });
    return p;
}

FreePoly power_sum_free(int k, int n) {
    const int m = n + 1;
    if (k == 0) return FreePoly::constant(m, m);
    FreePoly p(m);
    for (int j = 1; j <= m; ++j) {
        std::vector<int> e(m, 0);
        e[j - 1] = k;
        p.add_term(std::move(e), 1);
    }
    return p;
}

FreePoly e_derived_free(int i, int p, int n) {
    const int m = n + 1;
    if (p < 0 || p > n) return FreePoly::zero(m);
    return elementary_free(p + 1, n).derivative(i);
}

LaurentPoly e_derived(int i, int p, int n) {
    const FreePoly f = e_derived_free(i, p, n);
    LaurentPoly out(n);
    for (const auto& [e, c] : f.terms()) out.add_term(e, c);
    return out;
}

std::vector<Rational> power_sums_to_elementary(const std::vector<Rational>& p) {
    const size_t m = p.size();
    std::vector<Rational> e(m + 1, 0);
    e[0] = 1;
    for (size_t k = 1; k <= m; ++k) {
        Rational s = 0;
        for (size_t i = 1; i <= k; ++i) {
            const Rational term = e[k - i] * p[i - 1];
            s += (i % 2 == 1) ? term : -term;
        }
        e[k] = s / Rational(static_cast<int>(k));
    }
    return std::vector<Rational>(e.begin() + 1, e.end());
}

std::vector<Rational> elementary_to_power_sums(const std::vector<Rational>& e) {
    const size_t m = e.size();
    std::vector<Rational> p(m + 1, 0);
    for (size_t k = 1; k <= m; ++k) {
        Rational s = 0;
        for (size_t i = 1; i < k; ++i) {
            const Rational term = e[i - 1] * p[k - i];
            s += (i % 2 == 1) ? term : -term;
        }
        const Rational lead = Rational(static_cast<int>(k)) * e[k - 1];
        p[k] = s + ((k % 2 == 1) ? lead : -lead);
    }
    return std::vector<Rational>(p.begin() + 1, p.end());
}

bool check_telescoping(int N, int a, int b, int n) {
    if (!(0 <= a && a <= b && b <= N)) throw std::invalid_argument("check_telescoping: need 0<=a<=b<=N");
    const int m = n + 1;
    FreePoly lhs(m);
    for (int r = a; r <= b; ++r) {
        FreePoly term = elementary_free(N - r, n) * elementary_free(r, n);
        term *= Rational(N - 2 * r);
        lhs += term;
    }
    FreePoly rhs(m);
    for (int i = 1; i <= m; ++i) {
        FreePoly inner = e_derived_free(i, N - b - 1, n) * e_derived_free(i, b, n) -
                         e_derived_free(i, N - a, n) * e_derived_free(i, a - 1, n);
        rhs += FreePoly::variable(m, i) * inner;
    }
    return lhs == rhs;
}

bool check_reduce_difference(int m, int k, int i, int n) {
    const FreePoly lhs = e_derived_free(i, m - 1, n) * elementary_free(k, n) -
                         e_derived_free(i, k - 1, n) * elementary_free(m, n);
    const FreePoly rhs = e_derived_free(i, m - 1, n) * e_derived_free(i, k, n) -
                         e_derived_free(i, k - 1, n) * e_derived_free(i, m, n);
    return lhs == rhs;
}

namespace {

// Dominant representative of the exponent class of e: sort descending, then
// shift so the last entry is zero.  Always a partition.
ExponentVector dominant_representative(ExponentVector e) {
    std::sort(e.begin(), e.end(), std::greater<int>());
    const int last = e.back();
    if (last != 0)
        for (auto& x : e) x -= last;
    return e;
}

bool lex_less(const ExponentVector& a, const ExponentVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

PhiPoly express_in_phi_u(const LaurentPoly& p_u) {
    const int n = p_u.rank();

    // The rewriting below silently assumes full S_{n+1}-invariance; verify it.
    for (int i = 0; i + 1 <= n; ++i) {
        std::vector<int> perm(n + 1);
        for (int j = 0; j <= n; ++j) perm[j] = j;
        std::swap(perm[i], perm[i + 1]);
        if (p_u.permuted(perm) != p_u)
            throw SymmetryError("express_in_phi: input is not symmetric");
    }

    // Cache e_1..e_n on the torus.
    std::vector<LaurentPoly> e(n + 1, LaurentPoly(n));
    for (int r = 1; r <= n; ++r) e[r] = elementary_u(r, n);

    LaurentPoly rem = p_u;
    PhiPoly out(n, 1, 1);
    while (!rem.is_zero()) {
        ExponentVector lead;
        bool have = false;
        for (const auto& [exp, c] : rem.terms()) {
            ExponentVector d = dominant_representative(exp);
            if (!have || lex_less(lead, d)) {
                lead = std::move(d);
                have = true;
            }
        }
        const Rational c = rem.coefficient(lead);
        if (c == 0) throw SymmetryError("express_in_phi: leading orbit has vanishing coefficient");

        LaurentPoly prod = LaurentPoly::one(n);
        Rational binom_factor = 1;
        std::vector<int> phi_exp(n, 0);
        for (int i = 1; i <= n; ++i) {
            const int a = lead[i - 1] - lead[i];
            phi_exp[i - 1] = a;
            for (int k = 0; k < a; ++k) prod *= e[i];
            for (int k = 0; k < a; ++k) binom_factor *= binomial(n + 1, i);
        }
        rem -= prod * c;
        out += PhiPoly::monomial_scalar(n, phi_exp, c * binom_factor);
    }
    return out;
}

PhiPoly express_in_phi(const LaurentPoly& p) {
    if (!p.has_even_exponents())
        throw ParityError("express_in_phi: odd character content");
    return express_in_phi_u(p.halved_exponents());
}

}  // namespace mvop::symfun
