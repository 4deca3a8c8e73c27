#include "mvop/contract.hpp"

#include "mvop/rational_matrix.hpp"

namespace mvop {

namespace {

std::vector<std::vector<int>> simple_basis(int n) {
    std::vector<std::vector<int>> basis;
    for (int j = 0; j < n; ++j) {
        std::vector<int> x(n + 1, 0);
        x[j] = 1;
        x[j + 1] = -1;
        basis.push_back(std::move(x));
    }
    return basis;
}

RationalMatrix gram_inverse(const std::vector<std::vector<int>>& basis) {
    const int n = static_cast<int>(basis.size());
    RationalMatrix B(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            long s = 0;
            for (size_t t = 0; t < basis[j].size(); ++t)
                s += static_cast<long>(basis[j][t]) * basis[k][t];
            B(j, k) = s;
        }
    auto inv = inverse(B);
    if (!inv) throw std::invalid_argument("gradient_contract: basis is degenerate");
    return *inv;
}

}  // namespace

LaurentPoly gradient_contract_with_basis(const LaurentPoly& f, const LaurentPoly& g,
                                         const std::vector<std::vector<int>>& basis) {
    const RationalMatrix Binv = gram_inverse(basis);
    const int n = static_cast<int>(basis.size());
    std::vector<LaurentPoly> df, dg;
    df.reserve(n);
    dg.reserve(n);
    for (int j = 0; j < n; ++j) {
        df.push_back(f.derive_along(basis[j]));
        dg.push_back(g.derive_along(basis[j]));
    }
    LaurentPoly out(f.rank());
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            if (Binv(j, k) == 0 || df[j].is_zero() || dg[k].is_zero()) continue;
            out += df[j] * dg[k] * Binv(j, k);
        }
    return out;
}

LaurentPoly gradient_contract(const LaurentPoly& f, const LaurentPoly& g) {
    return gradient_contract_with_basis(f, g, simple_basis(f.rank()));
}

MatrixLaurent gradient_contract(const MatrixLaurent& F, const LaurentPoly& g) {
    const auto basis = simple_basis(F.rank());
    const RationalMatrix Binv = gram_inverse(basis);
    const int n = F.rank();
    MatrixLaurent out(F.rows(), F.cols(), n);
    for (int j = 0; j < n; ++j) {
        const MatrixLaurent dF = F.derive_along(basis[j]);
        for (int k = 0; k < n; ++k) {
            if (Binv(j, k) == 0) continue;
            const LaurentPoly dg = g.derive_along(basis[k]);
            if (dg.is_zero()) continue;
            out = out + dF * (dg * Binv(j, k));
        }
    }
    return out;
}

MatrixLaurent action_gradient_contract(const MatrixLaurent& F, const LaurentPoly& g) {
    const auto basis = simple_basis(F.rank());
    const RationalMatrix Binv = gram_inverse(basis);
    const int n = F.rank();
    const int N = F.rows();
    MatrixLaurent out(N, F.cols(), n);
    for (int j = 0; j < n; ++j) {
        RationalMatrix Xj(N, N);
        for (int t = 0; t < N; ++t) Xj(t, t) = basis[j][t];
        const MatrixLaurent XF = Xj * F;
        for (int k = 0; k < n; ++k) {
            if (Binv(j, k) == 0) continue;
            const LaurentPoly dg = g.derive_along(basis[k]);
            if (dg.is_zero()) continue;
            out = out + XF * (dg * Binv(j, k));
        }
    }
    return out;
}

}  // namespace mvop
