#pragma once

#include <vector>

#include "mvop/laurent.hpp"
#include "mvop/rational_matrix.hpp"

namespace mvop {

// Matrix with LaurentPoly entries.
class MatrixLaurent {
public:
    MatrixLaurent() : rows_(0), cols_(0), rank_(0) {}
    MatrixLaurent(int rows, int cols, int rank)
        : rows_(rows), cols_(cols), rank_(rank),
          data_(size_t(rows) * cols, LaurentPoly(rank)) {}

    static MatrixLaurent identity(int n, int rank) {
        MatrixLaurent m(n, n, rank);
        for (int i = 0; i < n; ++i) m(i, i) = LaurentPoly::one(rank);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int rank() const { return rank_; }

    LaurentPoly& operator()(int i, int j) { return data_[size_t(i) * cols_ + j]; }
    const LaurentPoly& operator()(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

    friend MatrixLaurent operator*(const MatrixLaurent& a, const MatrixLaurent& b) {
        MatrixLaurent r(a.rows_, b.cols_, a.rank_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    if (b(k, j).is_zero()) continue;
                    r(i, j) += a(i, k) * b(k, j);
                }
            }
        return r;
    }

    friend MatrixLaurent operator+(MatrixLaurent a, const MatrixLaurent& b) {
        for (size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }
    friend MatrixLaurent operator-(MatrixLaurent a, const MatrixLaurent& b) {
        for (size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }

    MatrixLaurent operator*(const LaurentPoly& p) const {
        MatrixLaurent r(rows_, cols_, rank_);
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * p;
        return r;
    }

    // Left multiplication by a constant rational matrix.
    friend MatrixLaurent operator*(const RationalMatrix& c, const MatrixLaurent& m) {
        MatrixLaurent r(c.rows(), m.cols_, m.rank_);
        for (int i = 0; i < c.rows(); ++i)
            for (int k = 0; k < c.cols(); ++k) {
                if (c(i, k) == 0) continue;
                for (int j = 0; j < m.cols_; ++j) r(i, j) += m(k, j) * c(i, k);
            }
        return r;
    }

    friend MatrixLaurent operator*(const MatrixLaurent& m, const RationalMatrix& c) {
        MatrixLaurent r(m.rows_, c.cols(), m.rank_);
        for (int i = 0; i < m.rows_; ++i)
            for (int k = 0; k < m.cols_; ++k) {
                if (m(i, k).is_zero()) continue;
                for (int j = 0; j < c.cols(); ++j)
                    if (c(k, j) != 0) r(i, j) += m(i, k) * c(k, j);
            }
        return r;
    }

    bool is_zero() const {
        for (const auto& p : data_)
            if (!p.is_zero()) return false;
        return true;
    }

    bool operator==(const MatrixLaurent& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    // Conjugate transpose on the torus (entry-wise t -> t^{-1}, then transpose).
    MatrixLaurent adjoint() const {
        MatrixLaurent r(cols_, rows_, rank_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j).conj();
        return r;
    }

    MatrixLaurent transposed() const {
        MatrixLaurent r(cols_, rows_, rank_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    MatrixLaurent derive_along(const std::vector<int>& x) const {
        MatrixLaurent r(rows_, cols_, rank_);
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i].derive_along(x);
        return r;
    }

    std::vector<std::vector<Complex>> evaluate(const TorusPoint& a) const {
        std::vector<std::vector<Complex>> m(rows_, std::vector<Complex>(cols_));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m[i][j] = (*this)(i, j).evaluate(a);
        return m;
    }

    int max_abs_exponent() const {
        int d = 0;
        for (const auto& p : data_) d = std::max(d, p.max_abs_exponent());
        return d;
    }

private:
    int rows_, cols_, rank_;
    std::vector<LaurentPoly> data_;
};

}  // namespace mvop
