#pragma once

#include <nlohmann/json.hpp>

#include "sasaki/generators.hpp"

namespace sasaki {

/// Schema: {"kind", "n", "beta0" | "beta0_cos2", "sign", "kappa1", "c1", "c2",
/// "d1", "d2", "a", "b", "z0"}. Absent vectors are zero; "sign" accepts +1/-1
/// or "+"/"-". Unknown keys are rejected. Throws MalformedInput.
GeneratorParams params_from_json(const nlohmann::json& j);
nlohmann::json params_to_json(const GeneratorParams& p);
GeneratorParams read_params_file(const std::string& path);

/// Parses "+", "-", "+1", "-1", "1".
int parse_sign(const std::string& s);

nlohmann::json jet_to_json(const Jet4& j);

}  // namespace sasaki
