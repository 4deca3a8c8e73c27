#include <doctest.h>

#include "mvop/serialize.hpp"

using namespace mvop;
using serialize::json;

TEST_CASE("Laurent polynomial JSON is canonical") {
    LaurentPoly p(2);
    p.add_term({0, 1, 2}, Rational(-1, 3));  // canonicalizes to (-2,-1,0)
    p.add_term({2, 0, 0}, Rational(5));
    const json j = serialize::to_json(p);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);
    // canonical exponents, sorted ascending lexicographically
    CHECK(j[0]["e"] == json::array({-2, -1, 0}));
    CHECK(j[0]["num"] == "-1");
    CHECK(j[0]["den"] == "3");
    CHECK(j[1]["e"] == json::array({2, 0, 0}));
    CHECK(j[1]["den"] == "1");
}

TEST_CASE("PhiPoly JSON carries shape and rational matrices") {
    PhiPoly p(2, 2, 2);
    RationalMatrix c(2, 2);
    c(0, 1) = Rational(7, 2);
    p.add_term({1, 0}, c);
    const json j = serialize::to_json(p);
    CHECK(j["shape"] == json::array({2, 2}));
    CHECK(j["terms"][0]["m"] == json::array({1, 0}));
    CHECK(j["terms"][0]["coef"][0][1] == "7/2");
}

TEST_CASE("weight spec JSON records size and provenance") {
    const auto spec = weight::make_weight_spec(1, 2);
    const json j = serialize::to_json(spec);
    CHECK(j["size"] == 3);
    CHECK(j["provenance"] == "congruence-class");
    CHECK(j["prefactor"]["pi_power"] == -1);
}

TEST_CASE("bottom set JSON keys are composition strings") {
    const json j = serialize::bottom_set_json(2, 1);
    REQUIRE(j.size() == 3);
    CHECK(j.contains("1.0.0"));
    CHECK(j.contains("0.1.0"));
    CHECK(j.contains("0.0.1"));
    CHECK(j["1.0.0"]["dim"] == "3");
    CHECK(j["0.1.0"]["dim"] == "9");
}

TEST_CASE("eigenvalue CSV has one row per label") {
    const auto fam = family::generate(1, 1, 1);
    const std::string csv = serialize::eigenvalue_csv(fam);
    // header + 2 degrees x 2 columns
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
}
