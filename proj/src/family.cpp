#include "mvop/family.hpp"

#include <functional>
#include <sstream>

#include "mvop/quadrature.hpp"

namespace mvop::family {

std::vector<std::vector<int>> degrees_of_total(int n, int total) {
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
    fill(0, total);
    return out;
}

namespace {

struct BasisIndex {
    std::vector<std::vector<int>> monos;  // per column
    std::vector<int> sigma;
    std::map<std::pair<std::vector<int>, int>, int> lookup;
    std::vector<int> degree;  // total degree per column

    int size() const { return static_cast<int>(monos.size()); }
};

BasisIndex build_basis(int n, int N, int max_degree) {
    BasisIndex b;
    for (int m = 0; m <= max_degree; ++m)
        for (const auto& mono : degrees_of_total(n, m))
            for (int s = 0; s < N; ++s) {
                b.lookup.emplace(std::make_pair(mono, s), b.size());
                b.monos.push_back(mono);
                b.sigma.push_back(s);
                b.degree.push_back(m);
            }
    return b;
}

PhiPoly column_poly(const BasisIndex& basis, const std::vector<Rational>& coords, int n, int N) {
    PhiPoly p(n, N, 1);
    for (int b = 0; b < basis.size(); ++b) {
        if (coords[b] == 0) continue;
        RationalMatrix c(N, 1);
        c(basis.sigma[b], 0) = coords[b];
        p.add_term(basis.monos[b], std::move(c));
    }
    return p;
}

std::vector<Rational> column_coords(const BasisIndex& basis, const PhiPoly& p) {
    std::vector<Rational> v(basis.size(), 0);
    for (const auto& [m, c] : p.terms())
        for (int s = 0; s < p.rows(); ++s) {
            if (c(s, 0) == 0) continue;
            auto it = basis.lookup.find(std::make_pair(m, s));
            if (it == basis.lookup.end())
                throw std::logic_error("column_coords: term outside basis span");
            v[it->second] = c(s, 0);
        }
    return v;
}

std::string degree_string(const std::vector<int>& d) {
    std::ostringstream os;
    for (size_t i = 0; i < d.size(); ++i) os << (i ? "," : "(") << d[i];
    os << ")";
    return os.str();
}

}  // namespace

QFamily generate(int n, int k, int max_total_degree) {
    QFamily fam;
    fam.n = n;
    fam.k = k;
    fam.max_degree = max_total_degree;

    const weight::WeightSpec spec = weight::make_weight_spec(n, k);
    const int N = spec.size();
    const auto bottom = spherical::bottom_set(n, k);

    quadrature::PairingEngine engine(spec.psi_adj_psi, spec.phis);
    BasisIndex basis = build_basis(n, N, max_total_degree);
    const int B = basis.size();

    // Dense Gram matrix of the monomial columns.
    RationalMatrix G(B, B);
    for (int i = 0; i < B; ++i)
        for (int j = 0; j < B; ++j)
            G(i, j) = engine.pairing(basis.monos[i], basis.sigma[i], basis.monos[j], basis.sigma[j]);

    auto dot = [&](const std::vector<Rational>& u, const std::vector<Rational>& v) {
        Rational s = 0;
        for (int i = 0; i < B; ++i) {
            if (u[i] == 0) continue;
            Rational inner = 0;
            for (int j = 0; j < B; ++j)
                if (v[j] != 0) inner += G(i, j) * v[j];
            s += u[i] * inner;
        }
        return s;
    };

    // Operators for joint labeling (k = 1).
    const bool with_operators = (k == 1);
    diffops::OperatorPair ops;
    if (with_operators) ops = diffops::build_operators(n, max_total_degree);

    auto gamma_of = [&](const std::vector<int>& d, int sigma, int sign) {
        return spherical::casimir_eigenvalue(spherical::weight_of_degree(bottom[sigma], d, n), sign);
    };

    fam.labeled = with_operators || (n == 1 && N == 1);

    std::vector<std::vector<Rational>> ortho;   // accumulated orthogonal columns
    std::vector<Rational> ortho_norm2;
    fam.blocks.resize(max_total_degree + 1);

    for (int deg = 0; deg <= max_total_degree; ++deg) {
        // Raw block: monomial columns of this degree, cleared against all
        // previous degrees.
        std::vector<std::vector<Rational>> block;
        for (int b = 0; b < B; ++b) {
            if (basis.degree[b] != deg) continue;
            std::vector<Rational> v(B, 0);
            v[b] = 1;
            for (size_t o = 0; o < ortho.size(); ++o) {
                const Rational c = dot(ortho[o], v) / ortho_norm2[o];
                if (c == 0) continue;
                for (int i = 0; i < B; ++i) v[i] -= c * ortho[o][i];
            }
            block.push_back(std::move(v));
        }
        const int dim = static_cast<int>(block.size());
        if (dim == 0) continue;

        if (!fam.labeled) {
            // Plain in-block orthogonalization, no labels.
            std::vector<std::vector<Rational>> done;
            for (auto v : block) {
                for (size_t o = 0; o < done.size(); ++o) {
                    const Rational c = dot(done[o], v) / dot(done[o], done[o]);
                    for (int i = 0; i < B; ++i) v[i] -= c * done[o][i];
                }
                bool zero = true;
                for (const auto& x : v) zero = zero && x == 0;
                if (zero) throw std::logic_error("generate: degenerate block column");
                done.push_back(v);
                fam.blocks[deg].push_back(column_poly(basis, v, n, N));
                ortho.push_back(v);
                ortho_norm2.push_back(dot(v, v));
            }
            continue;
        }

        // Labels of this degree and their predicted eigenvalue pairs.
        const auto degs = degrees_of_total(n, deg);
        std::vector<std::pair<std::vector<int>, int>> labels;
        std::map<std::pair<Rational, Rational>, std::vector<std::string>> seen;
        for (const auto& d : degs)
            for (int s = 0; s < N; ++s) {
                labels.emplace_back(d, s);
                seen[{gamma_of(d, s, +1), gamma_of(d, s, -1)}].push_back(degree_string(d));
            }
        for (const auto& [pair, who] : seen)
            if (who.size() > 1) {
                std::string msg = "generate: eigenvalue collision among";
                for (const auto& w : who) msg += " " + w;
                throw LabelCollision(msg);
            }
        if (static_cast<int>(labels.size()) != dim)
            throw std::logic_error("generate: block dimension mismatch");

        // Matrices of the two operators on the block.
        RationalMatrix Bm(B, dim);
        for (int c = 0; c < dim; ++c)
            for (int i = 0; i < B; ++i) Bm(i, c) = block[c][i];

        RationalMatrix Mp(dim, dim), Mm(dim, dim);
        const bool single = (dim == 1);
        if (!single) {
            for (int c = 0; c < dim; ++c) {
                const PhiPoly v = column_poly(basis, block[c], n, N);
                const auto wp = column_coords(basis, diffops::apply(ops.plus, v));
                const auto wm = column_coords(basis, diffops::apply(ops.minus, v));
                auto xp = solve_any(Bm, wp);
                auto xm = solve_any(Bm, wm);
                if (!xp || !xm)
                    throw std::logic_error("generate: operator action leaves the block span");
                for (int r = 0; r < dim; ++r) {
                    Mp(r, c) = (*xp)[r];
                    Mm(r, c) = (*xm)[r];
                }
            }
        }

        // Assemble members of this degree.
        std::map<std::vector<int>, Entry> local;
        for (const auto& [d, s] : labels) {
            std::vector<Rational> coords(B, 0);
            if (single) {
                coords = block[0];
            } else {
                const Rational gp = gamma_of(d, s, +1), gm = gamma_of(d, s, -1);
                RationalMatrix sys(2 * dim, dim);
                for (int r = 0; r < dim; ++r)
                    for (int c = 0; c < dim; ++c) {
                        sys(r, c) = Mp(r, c) - (r == c ? gp : Rational(0));
                        sys(dim + r, c) = Mm(r, c) - (r == c ? gm : Rational(0));
                    }
                const auto null = null_space(sys);
                if (null.size() != 1)
                    throw LabelCollision("generate: joint eigenspace for " + degree_string(d) +
                                         " has dimension " + std::to_string(null.size()));
                for (int c = 0; c < dim; ++c)
                    for (int i = 0; i < B; ++i) coords[i] += null[0][c] * block[c][i];
            }

            // Normalization: unit column sum at phi = (1,...,1).
            Rational colsum = 0;
            for (int i = 0; i < B; ++i) colsum += coords[i];  // phi^m(1)=1
            std::string rule = "column-sum";
            if (colsum != 0) {
                for (auto& x : coords) x /= colsum;
            } else {
                rule = "leading-coefficient";
                for (int i = B - 1; i >= 0; --i)
                    if (coords[i] != 0) {
                        const Rational lead = coords[i];
                        for (auto& x : coords) x /= lead;
                        break;
                    }
            }

            Entry& e = local[d];
            if (e.Q.rows() == 0) e.Q = PhiPoly(n, N, N);
            for (int i = 0; i < B; ++i) {
                if (coords[i] == 0) continue;
                RationalMatrix c(N, N);
                c(basis.sigma[i], s) = coords[i];
                e.Q.add_term(basis.monos[i], std::move(c));
            }
            e.H.resize(N);
            e.gamma_plus.resize(N);
            e.gamma_minus.resize(N);
            e.H[s] = dot(coords, coords);
            e.gamma_plus[s] = gamma_of(d, s, +1);
            e.gamma_minus[s] = gamma_of(d, s, -1);
            if (e.normalization.empty() || rule == "leading-coefficient") e.normalization = rule;

            ortho.push_back(coords);
            ortho_norm2.push_back(e.H[s]);
        }
        for (auto& [d, entry] : local) fam.entries.emplace(d, std::move(entry));
    }
    return fam;
}

RecurrenceCoeffs extract_recurrence(const QFamily& fam, const weight::WeightSpec& spec,
                                    const std::vector<int>& d, int j) {
    const int n = fam.n;
    int total = 0;
    for (int x : d) total += x;
    if (total + 1 > fam.max_degree)
        throw std::invalid_argument("extract_recurrence: family not populated to |d|+1");

    const Entry& base = fam.entries.at(d);
    const PhiPoly T = PhiPoly::variable(n, j) * base.Q;

    quadrature::PairingEngine engine(spec.psi_adj_psi, spec.phis);
    RecurrenceCoeffs rc;
    PhiPoly residual = T;
    for (int tot = std::max(0, total - 1); tot <= total + 1; ++tot) {
        for (const auto& dp : degrees_of_total(n, tot)) {
            const auto it = fam.entries.find(dp);
            if (it == fam.entries.end()) continue;
            const Entry& other = it->second;
            RationalMatrix ip = engine.pair(other.Q, T);
            // X = H^{-1} <Q_{d'}, T>
            RationalMatrix X(ip.rows(), ip.cols());
            for (int r = 0; r < ip.rows(); ++r)
                for (int c = 0; c < ip.cols(); ++c) X(r, c) = ip(r, c) / other.H[r];
            if (X.is_zero()) continue;
            residual -= other.Q * X;
            if (tot == total + 1)
                rc.A.emplace(dp, std::move(X));
            else if (tot == total)
                rc.B.emplace(dp, std::move(X));
            else
                rc.C.emplace(dp, std::move(X));
        }
    }
    if (!residual.is_zero())
        throw std::logic_error("extract_recurrence: nonzero expansion residual");
    return rc;
}

}  // namespace mvop::family
