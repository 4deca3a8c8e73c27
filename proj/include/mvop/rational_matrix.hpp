#pragma once

#include <optional>
#include <vector>

#include "mvop/rational.hpp"

namespace mvop {

// Dense matrix over the exact rationals.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, 0) {}

    static RationalMatrix identity(int n) {
        RationalMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static RationalMatrix diagonal(const std::vector<Rational>& d) {
        RationalMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
        for (size_t i = 0; i < d.size(); ++i) m(int(i), int(i)) = d[i];
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int i, int j) { return data_[size_t(i) * cols_ + j]; }
    const Rational& operator()(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : data_)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const RationalMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const RationalMatrix& o) const { return !(*this == o); }

    RationalMatrix& operator+=(const RationalMatrix& o) {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("RationalMatrix: shape mismatch");
        for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    RationalMatrix& operator-=(const RationalMatrix& o) {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("RationalMatrix: shape mismatch");
        for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
    friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }

    RationalMatrix operator-() const {
        RationalMatrix r(rows_, cols_);
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
        return r;
    }

    RationalMatrix& operator*=(const Rational& c) {
        for (auto& x : data_) x *= c;
        return *this;
    }
    friend RationalMatrix operator*(RationalMatrix a, const Rational& c) { return a *= c; }
    friend RationalMatrix operator*(const Rational& c, RationalMatrix a) { return a *= c; }

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("RationalMatrix: shape mismatch");
        RationalMatrix r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const Rational& bkj = b(k, j);
                    if (bkj != 0) r(i, j) += aik * bkj;
                }
            }
        return r;
    }

    RationalMatrix transposed() const {
        RationalMatrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

private:
    int rows_, cols_;
    std::vector<Rational> data_;
};

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(RationalMatrix& m);

// Basis of the right null space {x : m x = 0}, one column vector per entry.
std::vector<std::vector<Rational>> null_space(const RationalMatrix& m);

// Unique solution of a square nonsingular system; nullopt if singular or
// inconsistent is detected for the augmented path.
std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b);

// Least structured solve: any solution of a (possibly rectangular) consistent
// system; nullopt if inconsistent.
std::optional<std::vector<Rational>> solve_any(const RationalMatrix& a, const std::vector<Rational>& b);

Rational determinant(RationalMatrix m);

std::optional<RationalMatrix> inverse(const RationalMatrix& m);

}  // namespace mvop
