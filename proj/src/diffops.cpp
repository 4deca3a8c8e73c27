#include "mvop/diffops.hpp"

#include <functional>
#include <set>
#include <stdexcept>

#include "mvop/symfun.hpp"

namespace mvop::diffops {

PhiPoly apply(const DiffOperator& D, const PhiPoly& Q) {
    PhiPoly out(D.nvars, D.size, Q.cols());
    for (const auto& [alpha, P] : D.coefficients) {
        PhiPoly dQ = Q;
        for (size_t j = 0; j < alpha.size(); ++j)
            for (int r = 0; r < alpha[j]; ++r) dQ = dQ.derivative(static_cast<int>(j) + 1);
        if (dQ.is_zero()) continue;
        out += P * dQ;
    }
    return out;
}

std::vector<std::vector<PhiPoly>> second_order_symbol(int n) {
    const auto phis = spherical::zonal_basis(n);
    std::vector<std::vector<PhiPoly>> G(n, std::vector<PhiPoly>(n));
    for (int k = 0; k < n; ++k)
        for (int l = k; l < n; ++l) {
            PhiPoly g = symfun::express_in_phi(gradient_contract(phis[k], phis[l]));
            if (g.total_degree() > 2)
                throw std::logic_error("second_order_symbol: degree bound violated");
            G[k][l] = g;
            G[l][k] = std::move(g);
        }
    return G;
}

namespace {

// Solves psi . U = rhs for an N x N polynomial U of total degree <= 1,
// matching Laurent coefficients exactly.  Throws if no solution exists.
PhiPoly solve_degree_one(const MatrixLaurent& psi, const MatrixLaurent& rhs,
                         const std::vector<LaurentPoly>& phis, const char* what) {
    const int n = psi.rank();
    const int N = psi.rows();
    const int unknowns_per_col = (n + 1) * N;  // constant block + one block per phi_j

    // LHS generators: psi(i,l) * phi_j (j = 0 meaning the constant block).
    std::vector<std::vector<std::vector<LaurentPoly>>> gen(
        N, std::vector<std::vector<LaurentPoly>>(N, std::vector<LaurentPoly>(n + 1, LaurentPoly(n))));
    std::set<ExponentVector> exps;
    for (int i = 0; i < N; ++i)
        for (int l = 0; l < N; ++l) {
            gen[i][l][0] = psi(i, l);
            for (int j = 1; j <= n; ++j) gen[i][l][j] = psi(i, l) * phis[j - 1];
            for (int j = 0; j <= n; ++j)
                for (const auto& [e, c] : gen[i][l][j].terms()) exps.insert(e);
        }
    for (int i = 0; i < N; ++i)
        for (int m = 0; m < N; ++m)
            for (const auto& [e, c] : rhs(i, m).terms()) exps.insert(e);

    std::vector<ExponentVector> exp_list(exps.begin(), exps.end());
    std::map<ExponentVector, int> exp_index;
    for (size_t t = 0; t < exp_list.size(); ++t) exp_index.emplace(exp_list[t], static_cast<int>(t));
    const int rows = N * static_cast<int>(exp_list.size());

    RationalMatrix A(rows, unknowns_per_col);
    for (int i = 0; i < N; ++i)
        for (int l = 0; l < N; ++l)
            for (int j = 0; j <= n; ++j)
                for (const auto& [e, c] : gen[i][l][j].terms()) {
                    const int r = i * static_cast<int>(exp_list.size()) + exp_index.at(e);
                    A(r, j * N + l) += c;
                }

    PhiPoly U(n, N, N);
    for (int m = 0; m < N; ++m) {
        std::vector<Rational> b(rows, 0);
        for (int i = 0; i < N; ++i)
            for (const auto& [e, c] : rhs(i, m).terms())
                b[i * static_cast<int>(exp_list.size()) + exp_index.at(e)] = c;
        auto x = solve_any(A, b);
        if (!x) throw std::runtime_error(std::string(what) + ": inconsistent ansatz system");
        for (int j = 0; j <= n; ++j)
            for (int l = 0; l < N; ++l) {
                const Rational& v = (*x)[j * N + l];
                if (v == 0) continue;
                std::vector<int> mono(n, 0);
                if (j >= 1) mono[j - 1] = 1;
                RationalMatrix coef(N, N);
                coef(l, m) = v;
                U.add_term(std::move(mono), std::move(coef));
            }
    }

    // The linear system ranges over every exponent on both sides, so a
    // solution is already an exact identity; verify anyway.
    const MatrixLaurent check = psi * U.substitute(phis);
    if (!(check == rhs)) throw std::logic_error(std::string(what) + ": verification failed");
    return U;
}

}  // namespace

std::vector<FirstOrderData> derive_first_order_data(int n) {
    const MatrixLaurent psi = spherical::psi0(n);
    const auto phis = spherical::zonal_basis(n);
    const int N = n + 1;
    std::vector<FirstOrderData> out;
    out.reserve(n);
    for (int k = 1; k <= n; ++k) {
        MatrixLaurent rhs = gradient_contract(psi, phis[k - 1]);
        rhs = rhs + rhs;  // factor two in the defining identity
        const PhiPoly U = solve_degree_one(psi, rhs, phis, "derive_first_order_data");
        FirstOrderData d;
        d.C = U.coefficient(std::vector<int>(n, 0));
        d.L = U - PhiPoly::constant(n, d.C);
        const RationalMatrix zero(N, N);
        if (d.L.coefficient(std::vector<int>(n, 0)) != zero)
            throw std::logic_error("derive_first_order_data: constant term not separated");
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<PhiPoly> derive_upsilon(int n) {
    const MatrixLaurent psi = spherical::psi0(n);
    const auto phis = spherical::zonal_basis(n);
    std::vector<PhiPoly> out;
    out.reserve(n);
    for (int l = 1; l <= n; ++l) {
        const MatrixLaurent rhs = action_gradient_contract(psi, phis[l - 1]);
        out.push_back(solve_degree_one(psi, rhs, phis, "derive_upsilon"));
    }
    return out;
}

std::vector<Rational> eigenvalue_diag(int n, const std::vector<int>& d, int sign) {
    const auto bottom = spherical::bottom_set(n, 1);
    std::vector<Rational> diag;
    diag.reserve(bottom.size());
    for (const auto& nu : bottom)
        diag.push_back(spherical::casimir_eigenvalue(spherical::weight_of_degree(nu, d, n), sign));
    return diag;
}

namespace {

std::vector<std::vector<int>> degrees_up_to(int n, int maxtot) {
    std::vector<std::vector<int>> out;
    std::vector<int> d(n, 0);
    std::function<void(int, int)> fill = [&](int pos, int left) {
        if (pos == n - 1) {
            d[pos] = left;
            out.push_back(d);
            return;
        }
        for (int v = left; v >= 0; --v) {
            d[pos] = v;
            fill(pos + 1, left - v);
        }
    };
    for (int tot = 0; tot <= maxtot; ++tot) fill(0, tot);
    return out;
}

void assert_degree_bounds(const DiffOperator& D) {
    for (const auto& [alpha, P] : D.coefficients) {
        int s = 0;
        for (int x : alpha) s += x;
        if (P.total_degree() > s)
            throw std::logic_error("build_operators: coefficient degree exceeds |alpha|");
    }
}

}  // namespace

OperatorPair build_operators(int n, int table_degree) {
    const int N = n + 1;
    const auto G = second_order_symbol(n);
    const auto LC = derive_first_order_data(n);
    const auto Ups = derive_upsilon(n);

    // gamma_k: eigenvalue of the scalar radial operator on phi_k.
    std::vector<Rational> gamma(n);
    for (int k = 1; k <= n; ++k)
        gamma[k - 1] = spherical::casimir_eigenvalue(spherical::spherical_weight(k, n), +1);

    OperatorPair ops;
    ops.plus.nvars = ops.minus.nvars = n;
    ops.plus.size = ops.minus.size = N;

    const RationalMatrix I = RationalMatrix::identity(N);

    // Second order block: the symbol enters with weight one half, collapsing
    // ordered pairs (k,l) and (l,k) onto one multi-index.
    for (int k = 1; k <= n; ++k)
        for (int l = k; l <= n; ++l) {
            std::vector<int> alpha(n, 0);
            alpha[k - 1] += 1;
            alpha[l - 1] += 1;
            PhiPoly coef(n, N, N);
            const PhiPoly& g = G[k - 1][l - 1];
            const Rational w = (k == l) ? Rational(1, 2) : Rational(1);
            for (const auto& [m, c] : g.terms()) coef.add_term(m, I * (c(0, 0) * w));
            if (!coef.is_zero()) ops.plus.coefficients.emplace(std::move(alpha), std::move(coef));
        }

    // First order: (L_k + C_k)/2 + gamma_k phi_k I.
    for (int k = 1; k <= n; ++k) {
        std::vector<int> alpha(n, 0);
        alpha[k - 1] = 1;
        PhiPoly coef = (LC[k - 1].L + PhiPoly::constant(n, LC[k - 1].C)) * Rational(1, 2);
        coef += PhiPoly::variable(n, k) * (I * gamma[k - 1]);
        ops.plus.coefficients.emplace(alpha, std::move(coef));
        ops.minus.coefficients.emplace(std::move(alpha), Ups[k - 1]);
    }

    // Constant terms: the degree-zero eigenvalue matrices.
    const std::vector<int> zero_d(n, 0);
    ops.plus.coefficients.emplace(std::vector<int>(n, 0),
                                  PhiPoly::constant(n, RationalMatrix::diagonal(eigenvalue_diag(n, zero_d, +1))));
    ops.minus.coefficients.emplace(std::vector<int>(n, 0),
                                   PhiPoly::constant(n, RationalMatrix::diagonal(eigenvalue_diag(n, zero_d, -1))));

    for (const auto& d : degrees_up_to(n, table_degree)) {
        ops.plus.eigenvalues.emplace(d, eigenvalue_diag(n, d, +1));
        ops.minus.eigenvalues.emplace(d, eigenvalue_diag(n, d, -1));
    }

    assert_degree_bounds(ops.plus);
    assert_degree_bounds(ops.minus);
    return ops;
}

}  // namespace mvop::diffops
