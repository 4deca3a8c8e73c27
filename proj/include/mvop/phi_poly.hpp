#pragma once

#include <functional>
#include <map>
#include <vector>

#include "mvop/matrix_laurent.hpp"
#include "mvop/rational_matrix.hpp"

namespace mvop {

// Matrix-valued polynomial in the fundamental zonal spherical variables
// phi_1..phi_n.  Terms map a multi-exponent m in N_0^n to an exact rational
// matrix coefficient of phi^m.
class PhiPoly {
public:
    using MultiIndex = std::vector<int>;

    PhiPoly() : nvars_(0), rows_(0), cols_(0) {}
    PhiPoly(int nvars, int rows, int cols) : nvars_(nvars), rows_(rows), cols_(cols) {}

    static PhiPoly constant(int nvars, RationalMatrix m) {
        PhiPoly p(nvars, m.rows(), m.cols());
        p.add_term(MultiIndex(nvars, 0), std::move(m));
        return p;
    }

    static PhiPoly identity(int nvars, int n) {
        return constant(nvars, RationalMatrix::identity(n));
    }

    static PhiPoly scalar(int nvars, const Rational& c) {
        RationalMatrix m(1, 1);
        m(0, 0) = c;
        return constant(nvars, std::move(m));
    }

    // phi_j as a 1x1 polynomial, 1-based.
    static PhiPoly variable(int nvars, int j) {
        PhiPoly p(nvars, 1, 1);
        MultiIndex m(nvars, 0);
        m[j - 1] = 1;
        RationalMatrix c(1, 1);
        c(0, 0) = 1;
        p.add_term(std::move(m), std::move(c));
        return p;
    }

    static PhiPoly monomial_scalar(int nvars, MultiIndex m, const Rational& c) {
        PhiPoly p(nvars, 1, 1);
        RationalMatrix mat(1, 1);
        mat(0, 0) = c;
        p.add_term(std::move(m), std::move(mat));
        return p;
    }

    int nvars() const { return nvars_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<MultiIndex, RationalMatrix>& terms() const { return terms_; }

    void add_term(MultiIndex m, RationalMatrix c) {
        if (c.is_zero()) return;
        if (rows_ == 0 && cols_ == 0) {
            rows_ = c.rows();
            cols_ = c.cols();
        }
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    RationalMatrix coefficient(const MultiIndex& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? RationalMatrix(rows_, cols_) : it->second;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) {
            int s = 0;
            for (int x : m) s += x;
            d = std::max(d, s);
        }
        return d;
    }

    PhiPoly& operator+=(const PhiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    PhiPoly& operator-=(const PhiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend PhiPoly operator+(PhiPoly a, const PhiPoly& b) { return a += b; }
    friend PhiPoly operator-(PhiPoly a, const PhiPoly& b) { return a -= b; }

    PhiPoly operator-() const {
        PhiPoly r(nvars_, rows_, cols_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    // Matrix product; a 1x1 factor acts as a scalar on either side.
    friend PhiPoly operator*(const PhiPoly& a, const PhiPoly& b) {
        const bool scalar_a = (a.rows_ == 1 && a.cols_ == 1);
        const bool scalar_b = (b.rows_ == 1 && b.cols_ == 1);
        int rows = a.rows_, cols = b.cols_;
        if (scalar_a && !scalar_b) {
            rows = b.rows_;
            cols = b.cols_;
        } else if (scalar_b && !scalar_a) {
            rows = a.rows_;
            cols = a.cols_;
        } else if (!scalar_a && !scalar_b && a.cols_ != b.rows_) {
            throw std::invalid_argument("PhiPoly: shape mismatch in product");
        }
        PhiPoly r(a.nvars_, rows, cols);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                MultiIndex m(ma);
                for (size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
                if (scalar_a && !scalar_b)
                    r.add_term(std::move(m), cb * ca(0, 0));
                else if (scalar_b && !scalar_a)
                    r.add_term(std::move(m), ca * cb(0, 0));
                else
                    r.add_term(std::move(m), ca * cb);
            }
        return r;
    }

    PhiPoly& operator*=(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }
    friend PhiPoly operator*(PhiPoly a, const Rational& c) { return a *= c; }
    friend PhiPoly operator*(const Rational& c, PhiPoly a) { return a *= c; }

    friend PhiPoly operator*(const RationalMatrix& c, const PhiPoly& p) {
        if (p.rows_ == 1 && p.cols_ == 1 && c.cols() != 1) {
            PhiPoly r(p.nvars_, c.rows(), c.cols());
            for (const auto& [m, v] : p.terms_) r.add_term(m, c * v(0, 0));
            return r;
        }
        PhiPoly r(p.nvars_, c.rows(), p.cols_);
        for (const auto& [m, v] : p.terms_) r.add_term(m, c * v);
        return r;
    }
    friend PhiPoly operator*(const PhiPoly& p, const RationalMatrix& c) {
        if (p.rows_ == 1 && p.cols_ == 1 && c.rows() != 1) {
            PhiPoly r(p.nvars_, c.rows(), c.cols());
            for (const auto& [m, v] : p.terms_) r.add_term(m, c * v(0, 0));
            return r;
        }
        PhiPoly r(p.nvars_, p.rows_, c.cols());
        for (const auto& [m, v] : p.terms_) r.add_term(m, v * c);
        return r;
    }

    bool operator==(const PhiPoly& o) const {
        return nvars_ == o.nvars_ && rows_ == o.rows_ && cols_ == o.cols_ && terms_ == o.terms_;
    }
    bool operator!=(const PhiPoly& o) const { return !(*this == o); }

    // d/dphi_j, 1-based.
    PhiPoly derivative(int j) const {
        PhiPoly r(nvars_, rows_, cols_);
        for (const auto& [m, c] : terms_) {
            if (m[j - 1] == 0) continue;
            MultiIndex f(m);
            const int k = f[j - 1]--;
            r.add_term(std::move(f), c * Rational(k));
        }
        return r;
    }

    RationalMatrix evaluate(const std::vector<Rational>& phi) const {
        RationalMatrix r(rows_, cols_);
        for (const auto& [m, c] : terms_) {
            Rational f = 1;
            for (size_t i = 0; i < m.size(); ++i)
                for (int k = 0; k < m[i]; ++k) f *= phi[i];
            r += c * f;
        }
        return r;
    }

    std::vector<std::vector<Complex>> evaluate(const std::vector<Complex>& phi) const {
        std::vector<std::vector<Complex>> r(rows_, std::vector<Complex>(cols_, 0.0));
        for (const auto& [m, c] : terms_) {
            Complex f = 1.0;
            for (size_t i = 0; i < m.size(); ++i)
                for (int k = 0; k < m[i]; ++k) f *= phi[i];
            for (int i = 0; i < rows_; ++i)
                for (int j = 0; j < cols_; ++j) r[i][j] += f * to_double(c(i, j));
        }
        return r;
    }

    // Substitute phi_j -> given Laurent polynomials (pull back to the torus).
    MatrixLaurent substitute(const std::vector<LaurentPoly>& phi) const {
        const int rank = phi.empty() ? 0 : phi.front().rank();
        MatrixLaurent out(rows_, cols_, rank);
        for (const auto& [m, c] : terms_) {
            LaurentPoly mono = LaurentPoly::one(rank);
            for (size_t i = 0; i < m.size(); ++i)
                for (int k = 0; k < m[i]; ++k) mono *= phi[i];
            for (int i = 0; i < rows_; ++i)
                for (int j = 0; j < cols_; ++j)
                    if (c(i, j) != 0) out(i, j) += mono * c(i, j);
        }
        return out;
    }

    Rational scalar_coefficient(const MultiIndex& m) const {
        if (rows_ != 1 || cols_ != 1) throw std::logic_error("scalar_coefficient: not 1x1");
        return coefficient(m)(0, 0);
    }

private:
    int nvars_, rows_, cols_;
    std::map<MultiIndex, RationalMatrix> terms_;
};

}  // namespace mvop
