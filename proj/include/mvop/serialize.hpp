#pragma once

#include <string>

#include "json.hpp"
#include "mvop/commutant.hpp"
#include "mvop/diffops.hpp"
#include "mvop/family.hpp"
#include "mvop/weight.hpp"

namespace mvop::serialize {

using json = nlohmann::json;

// Canonical forms: exponents canonical and sorted, rationals as
// numerator/denominator strings.
json to_json(const Rational& r);
json to_json(const LaurentPoly& p);
json to_json(const RationalMatrix& m);
json to_json(const PhiPoly& p);
json to_json(const weight::WeightSpec& spec);
json to_json(const diffops::DiffOperator& op);
json to_json(const family::QFamily& fam);
json to_json(const commutant::CommutantReport& rep);
json bottom_set_json(int n, int k);

std::string boundary_csv(int n, int resolution);
std::string eigenvalue_csv(const family::QFamily& fam);

void write_file(const std::string& path, const std::string& content);

}  // namespace mvop::serialize
