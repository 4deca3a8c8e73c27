#pragma once

#include <string>

#include "mvop/weight.hpp"

namespace mvop::commutant {

struct CommutantReport {
    int dim_AW = 0;         // complex dimension of {Y : Y W(x) = W(x) Y}
    int dim_script_AW = 0;  // real dimension of {Y : Y W(x) = W(x) Y*}
    bool star_invariant = false;
    std::string verdict;    // "irreducible" | "reducible"
};

// Numerical analysis from torus samples: stacked linear conditions, null
// spaces by singular-value thresholding at 1e-10 relative.
CommutantReport analyze(const weight::WeightSpec& spec, int samples, unsigned seed = 0);

// Exact rational path over the coefficient matrices of W_pol.
CommutantReport analyze_exact(const weight::WeightSpec& spec);

// Replays the elimination argument behind the triviality of the commutant
// for k = 1: derives the coefficient matrices of phi_i phi_{n+1-i} and of
// phi_1 from the weight polynomial, asserts their structure, and runs the
// staged null-space reduction.
bool structured_checks(int n);

}  // namespace mvop::commutant
