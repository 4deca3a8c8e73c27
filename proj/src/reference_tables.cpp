#include "mvop/diffops.hpp"

// Closed-form coefficient tables for the n = 2 and n = 3 operators (k = 1),
// kept as an independent cross-check of the symbolic derivation.  Every
// entry satisfies the defining identities (solved exactly elsewhere) and the
// flip symmetry relating the k-th and (n+1-k)-th data.

namespace mvop::diffops {

namespace {

PhiPoly scalar2(std::initializer_list<std::pair<std::vector<int>, Rational>> terms) {
    PhiPoly p(2, 1, 1);
    for (const auto& [m, c] : terms) p += PhiPoly::monomial_scalar(2, m, c);
    return p;
}

PhiPoly scalar3(std::initializer_list<std::pair<std::vector<int>, Rational>> terms) {
    PhiPoly p(3, 1, 1);
    for (const auto& [m, c] : terms) p += PhiPoly::monomial_scalar(3, m, c);
    return p;
}

RationalMatrix mat(int N, std::initializer_list<std::initializer_list<Rational>> rows) {
    RationalMatrix m(N, N);
    int i = 0;
    for (const auto& row : rows) {
        int j = 0;
        for (const auto& v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

// L / Upsilon builders: one coefficient matrix per phi_j plus a constant.
PhiPoly poly_n(int n, int N, const std::vector<std::pair<std::vector<int>, RationalMatrix>>& terms) {
    PhiPoly p(n, N, N);
    for (const auto& [m, c] : terms) p.add_term(m, c);
    return p;
}

const Rational q0 = 0;

std::vector<Rational> n2_gamma_plus(const std::vector<int>& d) {
    const Rational quad = Rational(4, 3) * (d[0] * d[0] + d[0] * d[1] + d[1] * d[1]);
    return {quad + Rational(16, 3) * d[0] + Rational(14, 3) * d[1] + Rational(8, 3),
            quad + 6 * d[0] + 6 * d[1] + Rational(16, 3),
            quad + Rational(14, 3) * d[0] + Rational(16, 3) * d[1] + Rational(8, 3)};
}

std::vector<Rational> n2_gamma_minus(const std::vector<int>& d) {
    return {Rational(4, 3) * d[0] + Rational(2, 3) * d[1] + Rational(8, 3),
            Rational(-2, 3) * d[0] + Rational(2, 3) * d[1],
            Rational(-2, 3) * d[0] + Rational(-4, 3) * d[1] - Rational(8, 3)};
}

std::vector<Rational> n3_gamma_plus(const std::vector<int>& d) {
    const Rational quad = Rational(3, 2) * d[0] * d[0] + 2 * d[1] * d[1] +
                          Rational(3, 2) * d[2] * d[2] + 2 * d[0] * d[1] + d[0] * d[2] +
                          2 * d[1] * d[2];
    return {quad + Rational(15, 2) * d[0] + 9 * d[1] + Rational(13, 2) * d[2] + Rational(15, 4),
            quad + Rational(17, 2) * d[0] + 11 * d[1] + Rational(15, 2) * d[2] + Rational(35, 4),
            quad + Rational(15, 2) * d[0] + 11 * d[1] + Rational(17, 2) * d[2] + Rational(35, 4),
            quad + Rational(13, 2) * d[0] + 9 * d[1] + Rational(15, 2) * d[2] + Rational(15, 4)};
}

std::vector<Rational> n3_gamma_minus(const std::vector<int>& d) {
    return {Rational(3, 2) * d[0] + d[1] + Rational(1, 2) * d[2] + Rational(15, 4),
            Rational(-1, 2) * d[0] + d[1] + Rational(1, 2) * d[2] + Rational(5, 4),
            Rational(-1, 2) * d[0] - d[1] + Rational(1, 2) * d[2] - Rational(5, 4),
            Rational(-1, 2) * d[0] - d[1] - Rational(3, 2) * d[2] - Rational(15, 4)};
}

ReferenceTables tables_n2() {
    ReferenceTables t;
    t.G = {{scalar2({{{2, 0}, Rational(8, 3)}, {{0, 1}, Rational(-8, 3)}}),
            scalar2({{{1, 1}, Rational(4, 3)}, {{0, 0}, Rational(-4, 3)}})},
           {scalar2({{{1, 1}, Rational(4, 3)}, {{0, 0}, Rational(-4, 3)}}),
            scalar2({{{0, 2}, Rational(8, 3)}, {{1, 0}, Rational(-8, 3)}})}};

    t.L = {poly_n(2, 3,
                  {{{1, 0}, mat(3, {{Rational(8, 3), q0, q0}, {q0, 4, q0}, {q0, q0, Rational(4, 3)}})},
                   {{0, 1}, mat(3, {{q0, -2, q0}, {q0, q0, q0}, {q0, q0, q0}})}}),
           poly_n(2, 3,
                  {{{0, 1}, mat(3, {{Rational(4, 3), q0, q0}, {q0, 4, q0}, {q0, q0, Rational(8, 3)}})},
                   {{1, 0}, mat(3, {{q0, q0, q0}, {q0, q0, q0}, {q0, -2, q0}})}})};
    t.C = {mat(3, {{q0, q0, Rational(-4, 3)}, {Rational(-8, 3), q0, q0}, {q0, -2, q0}}),
           mat(3, {{q0, -2, q0}, {q0, q0, Rational(-8, 3)}, {Rational(-4, 3), q0, q0}})};

    t.Upsilon = {
        poly_n(2, 3,
               {{{0, 0}, mat(3, {{q0, q0, Rational(2, 3)}, {Rational(-4, 3), q0, q0}, {q0, Rational(-1, 3), q0}})},
                {{1, 0}, mat(3, {{Rational(4, 3), q0, q0}, {q0, Rational(-2, 3), q0}, {q0, q0, Rational(-2, 3)}})},
                {{0, 1}, mat(3, {{q0, 1, q0}, {q0, q0, q0}, {q0, q0, q0}})}}),
        poly_n(2, 3,
               {{{0, 0}, mat(3, {{q0, Rational(1, 3), q0}, {q0, q0, Rational(4, 3)}, {Rational(-2, 3), q0, q0}})},
                {{0, 1}, mat(3, {{Rational(2, 3), q0, q0}, {q0, Rational(2, 3), q0}, {q0, q0, Rational(-4, 3)}})},
                {{1, 0}, mat(3, {{q0, q0, q0}, {q0, q0, q0}, {q0, -1, q0}})}})};

    t.Gamma0 = {Rational(8, 3), Rational(16, 3), Rational(8, 3)};
    t.GammaMinus0 = {Rational(8, 3), 0, Rational(-8, 3)};
    t.gamma_plus = n2_gamma_plus;
    t.gamma_minus = n2_gamma_minus;
    return t;
}

ReferenceTables tables_n3() {
    ReferenceTables t;
    const PhiPoly G11 = scalar3({{{2, 0, 0}, 3}, {{0, 1, 0}, -3}});
    const PhiPoly G12 = scalar3({{{1, 1, 0}, 2}, {{0, 0, 1}, -2}});
    const PhiPoly G13 = scalar3({{{1, 0, 1}, 1}, {{0, 0, 0}, -1}});
    const PhiPoly G22 =
        scalar3({{{0, 2, 0}, 4}, {{1, 0, 1}, Rational(-32, 9)}, {{0, 0, 0}, Rational(-4, 9)}});
    const PhiPoly G23 = scalar3({{{0, 1, 1}, 2}, {{1, 0, 0}, -2}});
    const PhiPoly G33 = scalar3({{{0, 0, 2}, 3}, {{0, 1, 0}, -3}});
    t.G = {{G11, G12, G13}, {G12, G22, G23}, {G13, G23, G33}};

    t.L = {poly_n(3, 4,
                  {{{1, 0, 0}, mat(4, {{3, q0, q0, q0}, {q0, 5, q0, q0}, {q0, q0, 3, q0}, {q0, q0, q0, 1}})},
                   {{0, 1, 0}, mat(4, {{q0, -2, q0, q0}, {q0, q0, q0, q0}, {q0, q0, q0, q0}, {q0, q0, q0, q0}})},
                   {{0, 0, 1}, mat(4, {{q0, q0, Rational(-4, 3), q0}, {q0, q0, q0, q0}, {q0, q0, q0, q0}, {q0, q0, q0, q0}})}}),
           poly_n(3, 4,
                  {{{0, 1, 0}, mat(4, {{2, q0, q0, q0}, {q0, 6, q0, q0}, {q0, q0, 6, q0}, {q0, q0, q0, 2}})},
                   {{0, 0, 1}, mat(4, {{q0, Rational(-8, 3), q0, q0}, {q0, q0, Rational(-8, 3), q0}, {q0, q0, q0, q0}, {q0, q0, q0, q0}})},
                   {{1, 0, 0}, mat(4, {{q0, q0, q0, q0}, {q0, q0, q0, q0}, {q0, Rational(-8, 3), q0, q0}, {q0, q0, Rational(-8, 3), q0}})}}),
           poly_n(3, 4,
                  {{{0, 0, 1}, mat(4, {{1, q0, q0, q0}, {q0, 3, q0, q0}, {q0, q0, 5, q0}, {q0, q0, q0, 3}})},
                   {{0, 1, 0}, mat(4, {{q0, q0, q0, q0}, {q0, q0, q0, q0}, {q0, q0, q0, q0}, {q0, q0, -2, q0}})},
                   {{1, 0, 0}, mat(4, {{q0, q0, q0, q0}, {q0, q0, q0, q0}, {q0, q0, q0, q0}, {q0, Rational(-4, 3), q0, q0}})}})};
    t.C = {mat(4, {{q0, q0, q0, -1}, {-3, q0, q0, q0}, {q0, -3, q0, q0}, {q0, q0, Rational(-5, 3), q0}}),
           mat(4, {{q0, q0, Rational(-2, 3), q0}, {q0, q0, q0, -2}, {-2, q0, q0, q0}, {q0, Rational(-2, 3), q0, q0}}),
           mat(4, {{q0, Rational(-5, 3), q0, q0}, {q0, q0, -3, q0}, {q0, q0, q0, -3}, {-1, q0, q0, q0}})};

    t.Upsilon = {
        poly_n(3, 4,
               {{{0, 0, 0}, mat(4, {{q0, q0, q0, Rational(1, 2)}, {Rational(-3, 2), q0, q0, q0}, {q0, Rational(-1, 2), q0, q0}, {q0, q0, Rational(-1, 6), q0}})},
                {{1, 0, 0}, mat(4, {{Rational(3, 2), q0, q0, q0}, {q0, Rational(-1, 2), q0, q0}, {q0, q0, Rational(-1, 2), q0}, {q0, q0, q0, Rational(-1, 2)}})},
                {{0, 1, 0}, mat(4, {{q0, 1, q0, q0}, {q0, q0, q0, q0}, {q0, q0, q0, q0}, {q0, q0, q0, q0}})},
                {{0, 0, 1}, mat(4, {{q0, q0, Rational(2, 3), q0}, {q0, q0, q0, q0}, {q0, q0, q0, q0}, {q0, q0, q0, q0}})}}),
        poly_n(3, 4,
               {{{0, 0, 0}, mat(4, {{q0, q0, Rational(1, 9), q0}, {q0, q0, q0, 1}, {-1, q0, q0, q0}, {q0, Rational(-1, 9), q0, q0}})},
                {{0, 1, 0}, mat(4, {{1, q0, q0, q0}, {q0, 1, q0, q0}, {q0, q0, -1, q0}, {q0, q0, q0, -1}})},
                {{0, 0, 1}, mat(4, {{q0, Rational(4, 9), q0, q0}, {q0, q0, Rational(4, 3), q0}, {q0, q0, q0, q0}, {q0, q0, q0, q0}})},
                {{1, 0, 0}, mat(4, {{q0, q0, q0, q0}, {q0, q0, q0, q0}, {q0, Rational(-4, 3), q0, q0}, {q0, q0, Rational(-4, 9), q0}})}}),
        poly_n(3, 4,
               {{{0, 0, 0}, mat(4, {{q0, Rational(1, 6), q0, q0}, {q0, q0, Rational(1, 2), q0}, {q0, q0, q0, Rational(3, 2)}, {Rational(-1, 2), q0, q0, q0}})},
                {{0, 0, 1}, mat(4, {{Rational(1, 2), q0, q0, q0}, {q0, Rational(1, 2), q0, q0}, {q0, q0, Rational(1, 2), q0}, {q0, q0, q0, Rational(-3, 2)}})},
                {{0, 1, 0}, mat(4, {{q0, q0, q0, q0}, {q0, q0, q0, q0}, {q0, q0, q0, q0}, {q0, q0, -1, q0}})},
                {{1, 0, 0}, mat(4, {{q0, q0, q0, q0}, {q0, q0, q0, q0}, {q0, q0, q0, q0}, {q0, Rational(-2, 3), q0, q0}})}})};

    t.Gamma0 = {Rational(15, 4), Rational(35, 4), Rational(35, 4), Rational(15, 4)};
    t.GammaMinus0 = {Rational(15, 4), Rational(5, 4), Rational(-5, 4), Rational(-15, 4)};
    t.gamma_plus = n3_gamma_plus;
    t.gamma_minus = n3_gamma_minus;
    return t;
}

}  // namespace

ReferenceTables reference_tables(int n) {
    if (n == 2) return tables_n2();
    if (n == 3) return tables_n3();
    throw std::invalid_argument("reference_tables: only n = 2, 3 are tabulated");
}

}  // namespace mvop::diffops
