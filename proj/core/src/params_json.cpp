#include "sasaki/params_json.hpp"

#include <algorithm>
#include <fstream>

#include "sasaki/errors.hpp"

namespace sasaki {

namespace {

std::vector<double> vec(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) return {};
  const auto& v = j.at(key);
  if (!v.is_array()) throw Error(ErrorCode::MalformedInput, std::string(key) + " must be an array");
  std::vector<double> out;
  for (const auto& e : v) {
    if (!e.is_number()) throw Error(ErrorCode::MalformedInput, std::string(key) + " must hold numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

double num(const nlohmann::json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number()) throw Error(ErrorCode::MalformedInput, std::string(key) + " must be a number");
  return v.get<double>();
}

nlohmann::json frame_json(const FrameVector& v) { return {{"a", v.a}, {"b", v.b}, {"f", v.f}}; }

}  // namespace

int parse_sign(const std::string& s) {
  if (s == "+" || s == "+1" || s == "1") return 1;
  if (s == "-" || s == "-1") return -1;
  throw Error(ErrorCode::MalformedInput, "sign must be + or -");
}

GeneratorParams params_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::MalformedInput, "params must be a JSON object");
  static const char* known[] = {"kind", "n", "beta0", "beta0_cos2", "sign", "kappa1", "c1",
                                "c2",   "d1", "d2",   "a",          "b",    "z0"};
  for (const auto& item : j.items()) {
    if (std::find(std::begin(known), std::end(known), item.key()) == std::end(known)) {
      throw Error(ErrorCode::MalformedInput, "unknown key '" + item.key() + "'");
    }
  }
  if (!j.contains("kind") || !j.at("kind").is_string()) throw Error(ErrorCode::MalformedInput, "kind is required");
  GeneratorParams p;
  p.kind = curve_kind_from_string(j.at("kind").get<std::string>());
  if (!j.contains("n") || !j.at("n").is_number_integer()) throw Error(ErrorCode::MalformedInput, "n is required");
  p.n = j.at("n").get<int>();
  if (j.contains("beta0")) p.beta0 = num(j, "beta0");
  if (j.contains("beta0_cos2")) p.beta0_cos2 = num(j, "beta0_cos2");
  if (p.beta0 && p.beta0_cos2) throw Error(ErrorCode::MalformedInput, "give beta0 or beta0_cos2, not both");
  if (j.contains("sign")) {
    const auto& s = j.at("sign");
    p.sign = s.is_string() ? parse_sign(s.get<std::string>())
                           : parse_sign(std::to_string(s.is_number_integer() ? s.get<int>() : 0));
  }
  if (j.contains("kappa1")) p.kappa1 = num(j, "kappa1");
  p.c1 = vec(j, "c1");
  p.c2 = vec(j, "c2");
  p.d1 = vec(j, "d1");
  p.d2 = vec(j, "d2");
  p.a = vec(j, "a");
  p.b = vec(j, "b");
  if (j.contains("z0")) p.z0 = num(j, "z0");
  p.normalize();
  return p;
}

nlohmann::json params_to_json(const GeneratorParams& p) {
  nlohmann::json j;
  j["kind"] = to_string(p.kind);
  j["n"] = p.n;
  if (p.beta0) j["beta0"] = *p.beta0;
  if (p.beta0_cos2) j["beta0_cos2"] = *p.beta0_cos2;
  if (p.sign) j["sign"] = *p.sign;
  if (p.kappa1) j["kappa1"] = *p.kappa1;
  j["c1"] = p.c1;
  j["c2"] = p.c2;
  j["d1"] = p.d1;
  j["d2"] = p.d2;
  j["a"] = p.a;
  j["b"] = p.b;
  j["z0"] = p.z0;
  return j;
}

GeneratorParams read_params_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error(ErrorCode::MalformedInput, "cannot read " + path);
  nlohmann::json j;
  try {
    is >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedInput, path + ": " + e.what());
  }
  return params_from_json(j);
}

nlohmann::json jet_to_json(const Jet4& j) {
  return {{"s", j.s}, {"T", frame_json(j.t)}, {"dT", frame_json(j.dt)}, {"d2T", frame_json(j.d2t)},
          {"d3T", frame_json(j.d3t)}};
}

}  // namespace sasaki
