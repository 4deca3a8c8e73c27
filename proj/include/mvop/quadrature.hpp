#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "mvop/matrix_laurent.hpp"
#include "mvop/phi_poly.hpp"

namespace mvop::quadrature {

// Uniform tensor grid on the torus angles; integration of a Laurent
// polynomial is exact once points_per_angle exceeds its Fourier degree.
struct GridSpec {
    int n = 0;
    int points_per_angle = 0;
    long total_nodes() const {
        long t = 1;
        for (int i = 0; i < n; ++i) t *= points_per_angle;
        return t;
    }
};

struct GridOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int max_fourier_degree();         // default 512
void set_max_fourier_degree(int); // configuration hook

// |delta| on the torus as an exact Laurent polynomial,
// prod_{i<j} (t_i^2 - t_j^2)(t_i^{-2} - t_j^{-2}).
LaurentPoly delta_abs(int n);

// The signed density prod_{i<j} (t_i^2 - t_j^2)^2.
LaurentPoly delta_signed(int n);

// Normalized Haar average over the torus, optionally against |delta|.
// Exact path: constant-term extraction.
Rational integrate_exact(const LaurentPoly& f, bool with_delta);
RationalMatrix integrate_exact(const MatrixLaurent& f, bool with_delta);

// Floating path: uniform grid, size chosen from the Fourier degree of the
// integrand (times |delta| if requested) unless grid_override > 0.
Complex integrate_grid(const LaurentPoly& f, bool with_delta, int grid_override = 0);
std::vector<std::vector<Complex>> integrate_grid(const MatrixLaurent& f, bool with_delta,
                                                 int grid_override = 0);

GridSpec grid_for(int n, int fourier_degree);

// c_1 * integral of subst(P)^* (psi^* psi) subst(Q) |delta|, with
// c_1 = 1/(n+1)!.  The weight side comes in as psi_adj_psi = psi^* psi and
// the zonal substitutions for phi_1..phi_n.
RationalMatrix inner_product_exact(const PhiPoly& P, const PhiPoly& Q,
                                   const MatrixLaurent& psi_adj_psi,
                                   const std::vector<LaurentPoly>& phis);
std::vector<std::vector<Complex>> inner_product_grid(const PhiPoly& P, const PhiPoly& Q,
                                                     const MatrixLaurent& psi_adj_psi,
                                                     const std::vector<LaurentPoly>& phis,
                                                     int grid_override = 0);

// Exact inner products over the monomial columns phi^m e_sigma with cached
// constant-term tables; the workhorse behind orthogonalization and the
// recurrence extraction.
class PairingEngine {
public:
    PairingEngine(const MatrixLaurent& psi_adj_psi, const std::vector<LaurentPoly>& phis);

    int n() const { return n_; }
    int size() const { return N_; }

    // <phi^mu e_s, phi^mv e_t>
    Rational pairing(const std::vector<int>& mu, int s, const std::vector<int>& mv, int t);

    // Full matrix inner product <A, B> for N x c polynomials.
    RationalMatrix pair(const PhiPoly& A, const PhiPoly& B);

private:
    const LaurentPoly& phi_power(const std::vector<int>& g);
    Rational ct(const std::vector<int>& g, int s, int t);

    int n_, N_;
    Rational c1_;
    std::vector<std::vector<LaurentPoly>> F_;  // (psi* psi)_{st} |delta|
    std::vector<LaurentPoly> phis_;
    std::map<std::vector<int>, LaurentPoly> phi_powers_;
    std::map<std::tuple<std::vector<int>, int, int>, Rational> ct_cache_;
};

}  // namespace mvop::quadrature
