#pragma once

#include <map>
#include <string>
#include <vector>

#include "mvop/diffops.hpp"
#include "mvop/weight.hpp"

namespace mvop::family {

struct LabelCollision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Entry {
    PhiPoly Q;                        // N x N, columns indexed by sigma
    std::vector<Rational> H;          // squared column norms
    std::vector<Rational> gamma_plus;
    std::vector<Rational> gamma_minus;
    std::string normalization;        // "column-sum" | "leading-coefficient"
};

struct QFamily {
    int n = 0, k = 0, max_degree = 0;
    bool labeled = false;
    std::map<std::vector<int>, Entry> entries;  // multi-degree d -> entry
    // Unlabeled fallback: orthogonal column blocks per total degree.
    std::vector<std::vector<PhiPoly>> blocks;
};

// Degree-graded block orthogonalization against the matrix weight, with
// joint eigen-labeling by the two commuting operators where available
// (k = 1, or blocks of size one).  All arithmetic is exact.
QFamily generate(int n, int k, int max_total_degree);

struct RecurrenceCoeffs {
    std::map<std::vector<int>, RationalMatrix> A;  // |d'| = |d| + 1
    std::map<std::vector<int>, RationalMatrix> B;  // |d'| = |d|
    std::map<std::vector<int>, RationalMatrix> C;  // |d'| = |d| - 1
};

// Expansion of phi_j Q_d in the family; requires members up to |d|+1.
RecurrenceCoeffs extract_recurrence(const QFamily& fam, const weight::WeightSpec& spec,
                                    const std::vector<int>& d, int j);

// Multi-degrees with |d| == total, ordered descending lexicographically.
std::vector<std::vector<int>> degrees_of_total(int n, int total);

}  // namespace mvop::family
