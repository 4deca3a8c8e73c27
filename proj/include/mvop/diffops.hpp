#pragma once

#include <map>
#include <vector>

#include "mvop/contract.hpp"
#include "mvop/phi_poly.hpp"
#include "mvop/spherical.hpp"

namespace mvop::diffops {

// Matrix differential operator in phi-coordinates: a finite map from
// derivative multi-indices alpha (|alpha| <= 2) to polynomial coefficients,
// plus an optional table of diagonal eigenvalues keyed by multi-degree.
struct DiffOperator {
    int nvars = 0;
    int size = 0;
    std::map<std::vector<int>, PhiPoly> coefficients;
    std::map<std::vector<int>, std::vector<Rational>> eigenvalues;

    int order() const {
        int o = 0;
        for (const auto& [a, c] : coefficients) {
            int s = 0;
            for (int x : a) s += x;
            o = std::max(o, s);
        }
        return o;
    }
};

// sum_alpha P_alpha(phi) d^alpha Q, exact.
PhiPoly apply(const DiffOperator& D, const PhiPoly& Q);

// G_{kl} = gradient contraction of (phi_k, phi_l) written in phi; symmetric,
// total degree <= 2.  Returned as an n x n array of 1x1 polynomials.
std::vector<std::vector<PhiPoly>> second_order_symbol(int n);

struct FirstOrderData {
    PhiPoly L;         // degree one, no constant term
    RationalMatrix C;  // constant part
};

// Degree-one data solving  psi0 (L_k + C_k) = 2 * contraction(d psi0, d phi_k)
// by an exact linear ansatz fit; k = 1..n.  Standard representation only.
std::vector<FirstOrderData> derive_first_order_data(int n);

// Upsilon_l solving  psi0 Upsilon_l = dual-basis contraction of the diagonal
// action against d phi_l; degree one with constant term allowed.
std::vector<PhiPoly> derive_upsilon(int n);

struct OperatorPair {
    DiffOperator plus;   // second order
    DiffOperator minus;  // first order
};

// Assembles the two commuting operators for the k = 1 family and populates
// their eigenvalue tables up to |d| <= table_degree.
OperatorPair build_operators(int n, int table_degree = 3);

// Diagonal eigenvalue of the multi-degree-d member under the two operators.
std::vector<Rational> eigenvalue_diag(int n, const std::vector<int>& d, int sign);

// Tabulated coefficient data for the n = 2 and n = 3 operators (k = 1),
// recorded independently for cross-validation of the derivation.
struct ReferenceTables {
    std::vector<std::vector<PhiPoly>> G;  // n x n, 1x1 entries
    std::vector<PhiPoly> L;               // k = 1..n
    std::vector<RationalMatrix> C;
    std::vector<PhiPoly> Upsilon;
    std::vector<Rational> Gamma0;
    std::vector<Rational> GammaMinus0;
    // closed-form eigenvalue tables as functions of d
    std::vector<Rational> (*gamma_plus)(const std::vector<int>& d);
    std::vector<Rational> (*gamma_minus)(const std::vector<int>& d);
};
ReferenceTables reference_tables(int n);

}  // namespace mvop::diffops
