#pragma once

#include "mvop/matrix_laurent.hpp"

namespace mvop {

// Basis-independent contraction sum_i (d_{xi_i} f)(d_{xi_i} g) over a
// trace-form orthonormal basis of the diagonal traceless algebra, computed
// exactly from the rational basis X_j = E_jj - E_{j+1,j+1} and the inverse
// Gram matrix B_jk = tr(X_j X_k).
LaurentPoly gradient_contract(const LaurentPoly& f, const LaurentPoly& g);

// Entry-wise version with a matrix first slot.
MatrixLaurent gradient_contract(const MatrixLaurent& F, const LaurentPoly& g);

// Same contraction over an arbitrary integer traceless basis.
LaurentPoly gradient_contract_with_basis(const LaurentPoly& f, const LaurentPoly& g,
                                         const std::vector<std::vector<int>>& basis);

// sum_{j,k} (B^{-1})_{jk} X_j . F . d_{X_k} g, where X_j acts by left
// multiplication as a diagonal matrix.  This is the dual-basis contraction
// of a Lie-algebra action against a gradient.
MatrixLaurent action_gradient_contract(const MatrixLaurent& F, const LaurentPoly& g);

}  // namespace mvop
