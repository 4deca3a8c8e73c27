#pragma once

#include <map>
#include <vector>

#include "mvop/rational.hpp"

namespace mvop {

// Plain multivariate polynomial in m commuting variables, no torus relation.
// Used for symmetric-function identities that hold before the reduction
// t_1...t_{n+1} = 1 is imposed.
class FreePoly {
public:
    using Exps = std::vector<int>;

    explicit FreePoly(int vars = 0) : vars_(vars) {}

    static FreePoly zero(int vars) { return FreePoly(vars); }

    static FreePoly constant(int vars, const Rational& c) {
        FreePoly p(vars);
        p.add_term(Exps(vars, 0), c);
        return p;
    }

    static FreePoly variable(int vars, int j, int power = 1) {  // 1-based
        FreePoly p(vars);
        Exps e(vars, 0);
        e[j - 1] = power;
        p.add_term(std::move(e), 1);
        return p;
    }

    int vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exps, Rational>& terms() const { return terms_; }

    void add_term(Exps e, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    FreePoly& operator+=(const FreePoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    FreePoly& operator-=(const FreePoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend FreePoly operator+(FreePoly a, const FreePoly& b) { return a += b; }
    friend FreePoly operator-(FreePoly a, const FreePoly& b) { return a -= b; }

    friend FreePoly operator*(const FreePoly& a, const FreePoly& b) {
        FreePoly r(a.vars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exps e(ea);
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        return r;
    }

    FreePoly& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, v] : terms_) v *= c;
        return *this;
    }
    friend FreePoly operator*(FreePoly a, const Rational& c) { return a *= c; }
    friend FreePoly operator*(const Rational& c, FreePoly a) { return a *= c; }

    bool operator==(const FreePoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const FreePoly& o) const { return !(*this == o); }

    // d/dx_j, 1-based.
    FreePoly derivative(int j) const {
        FreePoly r(vars_);
        for (const auto& [e, c] : terms_) {
            if (e[j - 1] == 0) continue;
            Exps f(e);
            const int k = f[j - 1]--;
            r.add_term(std::move(f), c * k);
        }
        return r;
    }

private:
    int vars_;
    std::map<Exps, Rational> terms_;
};

}  // namespace mvop
