#pragma once

#include <stdexcept>
#include <vector>

#include "mvop/free_poly.hpp"
#include "mvop/laurent.hpp"
#include "mvop/phi_poly.hpp"

namespace mvop::symfun {

struct SymmetryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Symmetric functions in the squared torus variables u_j = t_j^2 with
// prod u_j = 1 (exponents are u-exponents, i.e. already halved).
LaurentPoly elementary_u(int r, int n);
LaurentPoly power_sum_u(int k, int n);

// Free-variable versions in n+1 variables, no product relation.
FreePoly elementary_free(int r, int n);
FreePoly power_sum_free(int k, int n);

// e^{(i)}_p = d/du_i e_{p+1}, free variables; i is 1-based.
FreePoly e_derived_free(int i, int p, int n);
// Same, reduced to the torus quotient.
LaurentPoly e_derived(int i, int p, int n);

// Newton-Girard conversions on exact rational sequences (index 1..m).
std::vector<Rational> power_sums_to_elementary(const std::vector<Rational>& p);
std::vector<Rational> elementary_to_power_sums(const std::vector<Rational>& e);

// sum_{r=a}^{b} (N-2r) e_{N-r} e_r
//   == sum_i u_i (e^{(i)}_{N-b-1} e^{(i)}_b - e^{(i)}_{N-a} e^{(i)}_{a-1}),
// checked as an exact identity in free variables.
bool check_telescoping(int N, int a, int b, int n);

// e^{(i)}_{m-1} e_k - e^{(i)}_{k-1} e_m
//   == e^{(i)}_{m-1} e^{(i)}_k - e^{(i)}_{k-1} e^{(i)}_m, free variables.
bool check_reduce_difference(int m, int k, int i, int n);

// Rewrites a Weyl-invariant Laurent polynomial in the t-variables (even
// exponents only) as the unique polynomial in phi_1..phi_n with
// phi_m = binom(n+1,m)^{-1} e_m(u).  Exact; throws SymmetryError or
// ParityError on invalid input.
PhiPoly express_in_phi(const LaurentPoly& p);

// Same for input already written in the u-variables.
PhiPoly express_in_phi_u(const LaurentPoly& p_u);

}  // namespace mvop::symfun
