#include <doctest.h>

#include "mvop/commutant.hpp"

using namespace mvop;
using namespace mvop::commutant;

TEST_CASE("rank two and three weights are irreducible") {
    for (int n = 2; n <= 3; ++n) {
        const auto spec = weight::make_weight_spec(n, 1);
        const auto rep = analyze(spec, spec.size() * spec.size() + 1, 0);
        CHECK(rep.dim_AW == 1);
        CHECK(rep.star_invariant);
        CHECK(rep.verdict == "irreducible");
        const auto ex = analyze_exact(spec);
        CHECK(ex.dim_AW == 1);
        CHECK(ex.star_invariant);
        CHECK(ex.verdict == "irreducible");
        // 1-dimensional commutant and star invariance: script dimension 1
        CHECK(ex.dim_script_AW == 1);
    }
}

TEST_CASE("the rank one weight reduces") {
    const auto spec = weight::make_weight_spec(1, 1);
    const auto rep = analyze(spec, 16, 0);
    CHECK(rep.dim_AW == 2);
    CHECK(rep.verdict == "reducible");
    const auto ex = analyze_exact(spec);
    CHECK(ex.dim_AW == 2);
    // the script space matches the self-adjoint part of the commutant
    CHECK(ex.star_invariant);
    CHECK(ex.dim_script_AW == 2);
}

TEST_CASE("null space dimensions are stable under more samples") {
    const auto spec = weight::make_weight_spec(2, 1);
    const auto a = analyze(spec, 10, 1);
    const auto b = analyze(spec, 20, 1);
    CHECK(a.dim_AW == b.dim_AW);
    CHECK(a.dim_script_AW == b.dim_script_AW);
}

TEST_CASE("structured elimination replays for n = 2..4") {
    for (int n = 2; n <= 4; ++n) CHECK(structured_checks(n));
}
