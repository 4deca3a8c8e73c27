#include <CLI11.hpp>
#include <iostream>

#include "mvop/serialize.hpp"
#include "mvop/verify.hpp"

using namespace mvop;

namespace {

struct RunConfig {
    int n = 2;
    int k = 1;
    int max_degree = 2;
    int grid_cap = 512;
    int resolution = 64;
    unsigned seed = 0;
    std::string out;
    std::string format = "json";
};

void emit(const RunConfig& cfg, const std::string& content) {
    if (cfg.out.empty())
        std::cout << content << "\n";
    else
        serialize::write_file(cfg.out, content);
}

int cmd_weight(const RunConfig& cfg) {
    const auto spec = weight::make_weight_spec(cfg.n, cfg.k);
    emit(cfg, serialize::to_json(spec).dump(2));
    return 0;
}

int cmd_psi0(const RunConfig& cfg) {
    const MatrixLaurent psi = cfg.k == 0   ? MatrixLaurent::identity(1, cfg.n)
                              : cfg.k == 1 ? spherical::psi0(cfg.n)
                                           : spherical::sym_power_psi0(cfg.n, cfg.k);
    serialize::json j;
    j["n"] = cfg.n;
    j["k"] = cfg.k;
    j["size"] = psi.rows();
    serialize::json rows = serialize::json::array();
    for (int i = 0; i < psi.rows(); ++i) {
        serialize::json row = serialize::json::array();
        for (int c = 0; c < psi.cols(); ++c) row.push_back(serialize::to_json(psi(i, c)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    j["bottom_set"] = serialize::bottom_set_json(cfg.n, cfg.k);
    emit(cfg, j.dump(2));
    return 0;
}

int cmd_domain(const RunConfig& cfg) {
    if (cfg.format == "csv") {
        emit(cfg, serialize::boundary_csv(cfg.n, cfg.resolution));
        return 0;
    }
    serialize::json j;
    j["n"] = cfg.n;
    j["volume_closed_form"] = weight::measure_constants(cfg.n).volume;
    j["volume_counted"] = weight::volume_by_counting(cfg.n);
    emit(cfg, j.dump(2));
    return 0;
}

int cmd_constants(const RunConfig& cfg) {
    const auto mc = weight::measure_constants(cfg.n);
    serialize::json j;
    j["n"] = cfg.n;
    j["c1"] = to_string(mc.c1);
    j["selberg_s1"] = to_string(mc.selberg_s1);
    j["volume"] = mc.volume;
    emit(cfg, j.dump(2));
    return 0;
}

int cmd_operators(const RunConfig& cfg) {
    const auto ops = diffops::build_operators(cfg.n, cfg.max_degree);
    serialize::json j;
    j["n"] = cfg.n;
    j["k"] = 1;
    j["plus"] = serialize::to_json(ops.plus);
    j["minus"] = serialize::to_json(ops.minus);
    emit(cfg, j.dump(2));
    return 0;
}

int cmd_generate(const RunConfig& cfg) {
    if (cfg.n > 3) {
        std::cerr << "generate supports n <= 3\n";
        return 2;
    }
    const auto fam = family::generate(cfg.n, cfg.k, cfg.max_degree);
    if (cfg.format == "csv") {
        emit(cfg, serialize::eigenvalue_csv(fam));
        return 0;
    }
    emit(cfg, serialize::to_json(fam).dump(2));
    return 0;
}

int cmd_commutant(const RunConfig& cfg) {
    const auto spec = weight::make_weight_spec(cfg.n, cfg.k);
    const int samples = spec.size() * spec.size() + 1;
    const auto rep = commutant::analyze(spec, samples, cfg.seed);
    serialize::json j = serialize::to_json(rep);
    if (cfg.n <= 3) {
        const auto ex = commutant::analyze_exact(spec);
        j["exact"] = serialize::to_json(ex);
    }
    emit(cfg, j.dump(2));
    return 0;
}

int cmd_verify(const RunConfig&) {
    return verify::run_suite(std::cout) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Matrix-valued orthogonal polynomial toolkit"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_common = [&](CLI::App* sub, bool with_k = true) {
        sub->add_option("--n", cfg.n, "rank (number of variables)")->check(CLI::Range(1, 6));
        if (with_k) sub->add_option("--k", cfg.k, "symmetric power")->check(CLI::Range(0, 6));
        sub->add_option("--max-degree", cfg.max_degree, "largest total degree");
        sub->add_option("--grid-cap", cfg.grid_cap, "Fourier degree cap for quadrature");
        sub->add_option("--resolution", cfg.resolution, "sampling resolution");
        sub->add_option("--seed", cfg.seed, "random seed for sampled operations");
        sub->add_option("--out", cfg.out, "output file (stdout if omitted)");
        sub->add_option("--format", cfg.format, "json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    auto* weight_cmd = app.add_subcommand("weight", "matrix weight data");
    add_common(weight_cmd);
    auto* psi_cmd = app.add_subcommand("psi0", "minimal spherical function matrix");
    add_common(psi_cmd);
    auto* domain_cmd = app.add_subcommand("domain", "orthogonality domain data");
    add_common(domain_cmd, false);
    auto* const_cmd = app.add_subcommand("constants", "measure constants");
    add_common(const_cmd, false);
    auto* ops_cmd = app.add_subcommand("operators", "commuting differential operators");
    add_common(ops_cmd, false);
    auto* gen_cmd = app.add_subcommand("generate", "orthogonal polynomial family");
    add_common(gen_cmd);
    auto* comm_cmd = app.add_subcommand("commutant", "weight commutant analysis");
    add_common(comm_cmd);
    auto* verify_cmd = app.add_subcommand("verify", "run the verification suite");
    add_common(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    quadrature::set_max_fourier_degree(cfg.grid_cap);

    try {
        if (weight_cmd->parsed()) return cmd_weight(cfg);
        if (psi_cmd->parsed()) return cmd_psi0(cfg);
        if (domain_cmd->parsed()) return cmd_domain(cfg);
        if (const_cmd->parsed()) return cmd_constants(cfg);
        if (ops_cmd->parsed()) return cmd_operators(cfg);
        if (gen_cmd->parsed()) return cmd_generate(cfg);
        if (comm_cmd->parsed()) return cmd_commutant(cfg);
        if (verify_cmd->parsed()) return cmd_verify(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
