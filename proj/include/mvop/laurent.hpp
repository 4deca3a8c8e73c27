#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "mvop/rational.hpp"

namespace mvop {

// Exponent vector of a torus character, length n+1, taken modulo the
// relation t_1 ... t_{n+1} = 1.  Canonical form has last entry zero.
using ExponentVector = std::vector<int>;

inline ExponentVector canonicalize(ExponentVector e) {
    if (e.empty()) return e;
    const int last = e.back();
    if (last != 0)
        for (auto& x : e) x -= last;
    return e;
}

// Point on the compact torus of SL(n+1): t_j = exp(i theta_j) for j <= n,
// t_{n+1} = exp(-i(theta_1+...+theta_n)).
struct TorusPoint {
    std::vector<double> angles;  // theta_1..theta_n

    explicit TorusPoint(std::vector<double> th) : angles(std::move(th)) {}

    int rank() const { return static_cast<int>(angles.size()); }

    std::vector<Complex> coordinates() const {
        std::vector<Complex> t(angles.size() + 1);
        double sum = 0.0;
        for (size_t j = 0; j < angles.size(); ++j) {
            t[j] = std::polar(1.0, angles[j]);
            sum += angles[j];
        }
        t.back() = std::polar(1.0, -sum);
        return t;
    }
};

// Laurent polynomial on the maximal torus of SL(n+1) with exact rational
// coefficients.  Exponents live in Z^{n+1} modulo (1,...,1); all stored
// keys are canonical and no zero coefficients are kept.
class LaurentPoly {
public:
    using TermMap = std::map<ExponentVector, Rational>;

    explicit LaurentPoly(int rank = 0) : rank_(rank) {}

    static LaurentPoly zero(int rank) { return LaurentPoly(rank); }

    static LaurentPoly constant(int rank, const Rational& c) {
        LaurentPoly p(rank);
        p.add_term(ExponentVector(rank + 1, 0), c);
        return p;
    }

    static LaurentPoly one(int rank) { return constant(rank, 1); }

    static LaurentPoly monomial(int rank, ExponentVector e, const Rational& c = 1) {
        LaurentPoly p(rank);
        p.add_term(std::move(e), c);
        return p;
    }

    // t_j, 1-based.
    static LaurentPoly variable(int rank, int j, int power = 1) {
        ExponentVector e(rank + 1, 0);
        e[j - 1] = power;
        return monomial(rank, std::move(e));
    }

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(ExponentVector e, const Rational& c) {
        if (c == 0) return;
        e = canonicalize(std::move(e));
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Rational coefficient(const ExponentVector& e) const {
        auto it = terms_.find(canonicalize(e));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational constant_term() const { return coefficient(ExponentVector(rank_ + 1, 0)); }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    LaurentPoly operator-() const {
        LaurentPoly r(rank_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r(a.rank_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                ExponentVector e(ea);
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        return r;
    }

    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }

    bool operator==(const LaurentPoly& o) const { return rank_ == o.rank_ && terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Complex conjugate on the torus: t -> t^{-1}, coefficients are real.
    LaurentPoly conj() const {
        LaurentPoly r(rank_);
        for (const auto& [e, c] : terms_) {
            ExponentVector f(e);
            for (auto& x : f) x = -x;
            r.add_term(std::move(f), c);
        }
        return r;
    }

    // Action of a permutation of the variables t_1..t_{n+1}; perm is 0-based,
    // new exponent of slot perm[i] is the old exponent of slot i.
    LaurentPoly permuted(const std::vector<int>& perm) const {
        LaurentPoly r(rank_);
        for (const auto& [e, c] : terms_) {
            ExponentVector f(e.size(), 0);
            for (size_t i = 0; i < e.size(); ++i) f[perm[i]] = e[i];
            r.add_term(std::move(f), c);
        }
        return r;
    }

    // Derivative along a traceless integer diagonal X = diag(x_1..x_{n+1}):
    // c t^e -> c (sum_j x_j e_j) t^e.  Well defined since sum x_j = 0.
    LaurentPoly derive_along(const std::vector<int>& x) const {
        if (static_cast<int>(x.size()) != rank_ + 1)
            throw std::invalid_argument("derive_along: size mismatch");
        if (std::accumulate(x.begin(), x.end(), 0) != 0)
            throw std::invalid_argument("derive_along: direction must be traceless");
        LaurentPoly r(rank_);
        for (const auto& [e, c] : terms_) {
            long w = 0;
            for (size_t j = 0; j < e.size(); ++j) w += static_cast<long>(x[j]) * e[j];
            if (w != 0) r.add_term(e, c * w);
        }
        return r;
    }

    Complex evaluate(const TorusPoint& a) const {
        if (a.rank() != rank_) throw std::invalid_argument("evaluate: rank mismatch");
        Complex s = 0.0;
        for (const auto& [e, c] : terms_) {
            double phase = 0.0;  // canonical form: e[rank_] == 0
            for (int j = 0; j < rank_; ++j) phase += a.angles[j] * e[j];
            s += to_double(c) * std::polar(1.0, phase);
        }
        return s;
    }

    // Largest |e_j| over stored canonical exponents; grid exactness bound.
    int max_abs_exponent() const {
        int m = 0;
        for (const auto& [e, c] : terms_)
            for (int x : e) m = std::max(m, std::abs(x));
        return m;
    }

    // True if every canonical exponent is even (the polynomial lives in the
    // squared variables u_j = t_j^2).
    bool has_even_exponents() const {
        for (const auto& [e, c] : terms_)
            for (int x : e)
                if (x % 2 != 0) return false;
        return true;
    }

    // Reinterpret exponents e -> e/2 (requires has_even_exponents).
    LaurentPoly halved_exponents() const {
        LaurentPoly r(rank_);
        for (const auto& [e, c] : terms_) {
            ExponentVector f(e);
            for (auto& x : f) {
                if (x % 2 != 0) throw std::domain_error("halved_exponents: odd exponent");
                x /= 2;
            }
            r.add_term(std::move(f), c);
        }
        return r;
    }

    // Exponents e -> 2e (embed u-variables back into t-variables).
    LaurentPoly doubled_exponents() const {
        LaurentPoly r(rank_);
        for (const auto& [e, c] : terms_) {
            ExponentVector f(e);
            for (auto& x : f) x *= 2;
            r.add_term(std::move(f), c);
        }
        return r;
    }

private:
    int rank_;
    TermMap terms_;
};

}  // namespace mvop
