#include "mvop/serialize.hpp"

#include <fstream>
#include <sstream>

namespace mvop::serialize {

json to_json(const Rational& r) {
    return json{{"num", boost::multiprecision::numerator(r).str()},
                {"den", boost::multiprecision::denominator(r).str()}};
}

// Canonical form: a list of terms with canonical exponents, sorted
// lexicographically (std::map order).
json to_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json t;
        t["e"] = e;
        t["num"] = boost::multiprecision::numerator(c).str();
        t["den"] = boost::multiprecision::denominator(c).str();
        terms.push_back(std::move(t));
    }
    return terms;
}

json to_json(const RationalMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const PhiPoly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms())
        terms.push_back(json{{"m", m}, {"coef", to_json(c)}});
    return json{{"shape", {p.rows(), p.cols()}}, {"terms", std::move(terms)}};
}

json to_json(const weight::WeightSpec& spec) {
    json j;
    j["n"] = spec.n;
    j["k"] = spec.k;
    j["size"] = spec.size();
    j["W_pol"] = to_json(spec.W_pol);
    j["P"] = to_json(spec.P);
    j["prefactor"] = {{"rational", to_string(spec.prefactor_rational)}, {"pi_power", -spec.n}};
    j["provenance"] = spec.provenance;
    return j;
}

json to_json(const diffops::DiffOperator& op) {
    json coeffs = json::array();
    for (const auto& [alpha, P] : op.coefficients)
        coeffs.push_back(json{{"alpha", alpha}, {"coef", to_json(P)}});
    json eig = json::object();
    for (const auto& [d, diag] : op.eigenvalues) {
        std::ostringstream key;
        for (size_t i = 0; i < d.size(); ++i) key << (i ? "." : "") << d[i];
        json vals = json::array();
        for (const auto& v : diag) vals.push_back(to_string(v));
        eig[key.str()] = std::move(vals);
    }
    return json{{"order", op.order()}, {"coefficients", std::move(coeffs)}, {"eigenvalues", std::move(eig)}};
}

json to_json(const family::QFamily& fam) {
    json j;
    j["n"] = fam.n;
    j["k"] = fam.k;
    j["max_degree"] = fam.max_degree;
    j["labeled"] = fam.labeled;
    if (fam.labeled) {
        json entries = json::object();
        for (const auto& [d, e] : fam.entries) {
            std::ostringstream key;
            for (size_t i = 0; i < d.size(); ++i) key << (i ? "." : "") << d[i];
            json je;
            je["Q"] = to_json(e.Q);
            json H = json::array(), gp = json::array(), gm = json::array();
            for (const auto& v : e.H) H.push_back(to_string(v));
            for (const auto& v : e.gamma_plus) gp.push_back(to_string(v));
            for (const auto& v : e.gamma_minus) gm.push_back(to_string(v));
            je["H"] = std::move(H);
            je["gamma_plus"] = std::move(gp);
            je["gamma_minus"] = std::move(gm);
            je["normalization"] = e.normalization;
            entries[key.str()] = std::move(je);
        }
        j["entries"] = std::move(entries);
    } else {
        json blocks = json::array();
        for (const auto& block : fam.blocks) {
            json cols = json::array();
            for (const auto& q : block) cols.push_back(to_json(q));
            blocks.push_back(std::move(cols));
        }
        j["blocks"] = std::move(blocks);
    }
    return j;
}

json to_json(const commutant::CommutantReport& rep) {
    return json{{"dim_AW", rep.dim_AW},
                {"dim_script_AW", rep.dim_script_AW},
                {"star_invariant", rep.star_invariant},
                {"verdict", rep.verdict}};
}

json bottom_set_json(int n, int k) {
    json out = json::object();
    for (const auto& el : spherical::bottom_set(n, k)) {
        std::ostringstream key;
        for (size_t i = 0; i < el.composition.size(); ++i)
            key << (i ? "." : "") << el.composition[i];
        json w;
        w["left"] = el.weight.left;
        w["right"] = el.weight.right;
        w["dim"] = to_string(spherical::weyl_dim(el.weight));
        out[key.str()] = std::move(w);
    }
    return out;
}

std::string boundary_csv(int n, int resolution) {
    std::ostringstream os;
    for (int i = 1; i <= n; ++i) os << "b" << i << ",";
    for (int i = 1; i <= n; ++i) os << "x" << i << (i < n ? "," : "\n");
    for (const auto& s : weight::domain_boundary(n, resolution)) {
        for (double b : s.alcove) os << b << ",";
        for (size_t i = 0; i < s.coords.size(); ++i)
            os << s.coords[i] << (i + 1 < s.coords.size() ? "," : "\n");
    }
    return os.str();
}

std::string eigenvalue_csv(const family::QFamily& fam) {
    std::ostringstream os;
    os << "d,sigma,H,gamma_plus,gamma_minus\n";
    for (const auto& [d, e] : fam.entries) {
        std::ostringstream key;
        for (size_t i = 0; i < d.size(); ++i) key << (i ? "." : "") << d[i];
        for (size_t s = 0; s < e.H.size(); ++s)
            os << key.str() << "," << s + 1 << "," << to_string(e.H[s]) << ","
               << to_string(e.gamma_plus[s]) << "," << to_string(e.gamma_minus[s]) << "\n";
    }
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    f << content;
}

}  // namespace mvop::serialize
