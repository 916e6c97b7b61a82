#pragma once

#include <json.hpp>
#include <ostream>
#include <string>

#include "gea/control.hpp"
#include "gea/factorizer.hpp"
#include "gea/su2.hpp"

namespace gea::jsonio {

using json = nlohmann::ordered_json;

// Matrices are row-major nested arrays; complex numbers are [re, im] pairs.
// All decoders throw std::invalid_argument on shape or type mismatches.

json mat3_to_json(const Rotation& m);
Rotation mat3_from_json(const json& j, const std::string& what);

json skew_to_json(const SkewGenerator& z);
SkewGenerator skew_from_json(const json& j, const std::string& what);

json su_to_json(const SuGenerator& v);
SuGenerator su_from_json(const json& j, const std::string& what);

json unitary_to_json(const Unitary2& u);
Unitary2 unitary_from_json(const json& j, const std::string& what);

json factors_to_json(const Factorization& f);
Factorization factors_from_json(const json& j, double rho, const std::string& what);

json schedule_to_json(const ControlSchedule& s);
ControlSchedule schedule_from_json(const json& j, const std::string& what);

double number_field(const json& j, const std::string& key);
const json& required_field(const json& j, const std::string& key);

/// Serialize with deterministic field order and every floating-point number
/// printed at 17 significant digits, so identical inputs produce
/// byte-identical output.
std::string dump_deterministic(const json& j);
void write_deterministic(std::ostream& os, const json& j);

}  // namespace gea::jsonio
