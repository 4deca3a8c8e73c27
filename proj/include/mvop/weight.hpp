#pragma once

#include <string>
#include <vector>

#include "mvop/phi_poly.hpp"
#include "mvop/quadrature.hpp"
#include "mvop/spherical.hpp"

namespace mvop::weight {

// The matrix weight data for a pair (n, k).  For k = 1 the polynomial part
// is exact; for k >= 2 it is determined only up to congruence by a constant
// invertible factor, which the provenance field records.
struct WeightSpec {
    int n = 0;
    int k = 0;
    PhiPoly W_pol;                  // N x N, N = binom(n+k, k)
    PhiPoly P;                      // 1 x 1 scalar density polynomial
    Rational prefactor_rational;    // (2 pi)^{-n} prod_k binom(n+1,k) = this / pi^n
    std::string provenance;         // "exact" | "congruence-class"
    MatrixLaurent psi;              // torus-side matrix of minimal spherical functions
    MatrixLaurent psi_adj_psi;      // cached psi^* psi
    std::vector<LaurentPoly> phis;  // zonal substitutions

    int size() const { return W_pol.rows(); }
};

WeightSpec make_weight_spec(int n, int k);

// Polynomial part of the matrix weight.  k = 1 uses the closed-form binomial
// sum plus the flip symmetry; k >= 2 rewrites psi^* psi entry-wise.
PhiPoly weight_polynomial(int n, int k);

// Scalar density P with P(phi(a)) = prod_{i<j}(t_i^2 - t_j^2)^2, obtained
// from the Hankel determinant of power sums.
PhiPoly scalar_P(int n);

// Real coordinates for the image domain: conjugate pairs (Re z_i, Im z_i)
// first, the self-conjugate middle coordinate last when n is odd.
std::vector<Complex> real_coords_to_phi(const std::vector<double>& v, int n);
std::vector<double> phi_to_real_coords(const std::vector<Complex>& phi, int n);

// Membership in the closure of the connected component of {P != 0}
// containing 0, decided by sign tracking along the segment from 0 to v.
bool domain_contains(const std::vector<double>& v, int n, int resolution = 10000);

// Images of an alcove-face grid under phi; each row is the face parameters
// followed by the real coordinates.
struct BoundarySample {
    std::vector<double> alcove;  // barycentric face parameters b_1..b_n
    std::vector<double> coords;  // real coordinates of phi(exp H)
};
std::vector<BoundarySample> domain_boundary(int n, int resolution);

struct MeasureConstants {
    Rational c1;          // 1/(n+1)!
    Rational selberg_s1;  // (n+1)!
    double volume;        // volume of the image domain
};
MeasureConstants measure_constants(int n);

// Volume of the domain by hierarchically refined counting with
// domain_contains semantics (component of 0).
double volume_by_counting(int n, int base_resolution = 0, int subdivision = 0);

}  // namespace mvop::weight
