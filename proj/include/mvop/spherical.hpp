#pragma once

#include <vector>

#include "mvop/matrix_laurent.hpp"
#include "mvop/rational_matrix.hpp"

namespace mvop::spherical {

// Dominant SL(n+1) weight in partition coordinates: a non-increasing integer
// vector of length n+1, normalized so the last entry is zero.
using Weight = std::vector<int>;

struct WeightPair {
    Weight left, right;
};

// omega_i as a partition (1,...,1,0,...,0); omega_0 = omega_{n+1} = 0.
Weight fundamental_weight(int i, int n);

Weight normalize_weight(Weight w);
Weight add_weights(const Weight& a, const Weight& b);

// Fundamental zonal spherical function phi_i on the torus (t-variables),
// phi_i = binom(n+1,i)^{-1} sum_J t_{j_1}^2...t_{j_i}^2.
LaurentPoly zonal_phi(int i, int n);
std::vector<LaurentPoly> zonal_basis(int n);

// The (n+1)x(n+1) matrix of degree-zero spherical functions for k=1.
// Entry (i,m) = binom(n,m-1)^{-1} (t_i/prod t) sum_{J: i in J, |J|=m} (t^{J\i})^2.
MatrixLaurent psi0(int n);

LaurentPoly det_psi0(int n);
// c prod_{i<j} (t_i^2 - t_j^2) with c = prod_{m=1}^{n+1} binom(n,m-1)^{-1}.
LaurentPoly det_psi0_closed_form(int n);

// Compositions of k into `parts` non-negative parts, ordered so that the
// lexicographically largest composition comes first.
std::vector<std::vector<int>> compositions(int k, int parts);

// Non-negative integer matrices with column sums tau and row sums rho
// (entry s[p][q] sits in column p, row q), in a fixed deterministic order.
std::vector<std::vector<std::vector<int>>> enumerate_M(const std::vector<int>& tau,
                                                       const std::vector<int>& rho);

// Matrix of the action of psi0 on the k-th symmetric power in the monomial
// basis, row-rescaled so the value at the identity is the all-ones matrix.
MatrixLaurent sym_power_psi0(int n, int k);

// Weyl dimension formula, per SL(n+1) factor and for pairs.
Rational weyl_dim_single(const Weight& w);
Rational weyl_dim(const WeightPair& w);

// <lambda, lambda + 2 rho> with the trace-form inner product, per factor;
// sign = +1 combines the two factors by a sum, -1 by a difference.
Rational casimir_single(const Weight& w);
Rational casimir_eigenvalue(const WeightPair& w, int sign);

struct BottomElement {
    std::vector<int> composition;  // of k, n+1 parts
    WeightPair weight;             // sum_i k_i (omega_i, omega_{n+2-i})
};

// The bottom set B(k omega_1); size binom(n+k,k).
std::vector<BottomElement> bottom_set(int n, int k);

// Spherical weight eta_j = (omega_j, omega_{n+1-j}).
WeightPair spherical_weight(int j, int n);

// lambda(sigma, d) = nu_sigma + sum_j d_j eta_j.
WeightPair weight_of_degree(const BottomElement& nu, const std::vector<int>& d, int n);

// Torus point the barycenter of the fundamental alcove maps to; all zonal
// functions vanish there.
TorusPoint barycenter_point(int n);

}  // namespace mvop::spherical
