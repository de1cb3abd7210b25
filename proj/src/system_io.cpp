#include "biproj/system_io.hpp"

#include <fstream>

#include "biproj/error.hpp"

namespace biproj {

FieldSpec field_from_json(const nlohmann::json& j) {
  if (j.is_string() && j.get<std::string>() == "Q") return FieldSpec::rationals();
  if (j.is_object() && j.contains("Fp") && j["Fp"].is_number_unsigned()) {
    return FieldSpec::prime(j["Fp"].get<std::uint32_t>());
  }
  throw Error(Errc::InvalidInput, "field must be \"Q\" or {\"Fp\": p}, got " + j.dump());
}

nlohmann::json field_to_json(const FieldSpec& f) {
  if (f.is_prime()) return {{"Fp", f.modulus()}};
  return "Q";
}

FieldSpec parse_field_flag(const std::string& text) {
  if (text == "Q") return FieldSpec::rationals();
  std::string digits = text;
  if (digits.rfind("Fp:", 0) == 0) digits = digits.substr(3);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(Errc::InvalidInput, "field flag must be Q, Fp:<p> or <p>");
  }
  return FieldSpec::prime(static_cast<std::uint32_t>(std::stoul(digits)));
}

BiSystem system_from_json(const nlohmann::json& j, const std::optional<FieldSpec>& field_override) {
  if (!j.is_object() || !j.contains("n") || !j.contains("m") || !j.contains("generators")) {
    throw Error(Errc::InvalidInput, "system needs n, m and generators");
  }
  if (!j["n"].is_number_integer() || !j["m"].is_number_integer() || !j["generators"].is_array()) {
    throw Error(Errc::InvalidInput, "n and m must be integers, generators an array");
  }
  const RingDims dims{j["n"].get<int>(), j["m"].get<int>()};
  if (dims.n < 0 || dims.m < 0 || dims.nvars() > kMaxVars) {
    throw Error(Errc::InvalidInput, "ring dimensions out of range");
  }
  FieldSpec field = j.contains("field") ? field_from_json(j["field"]) : FieldSpec::rationals();
  if (field_override) field = *field_override;
  BiSystem sys{dims, field, {}};
  for (const auto& g : j["generators"]) {
    if (!g.is_string()) throw Error(Errc::InvalidInput, "generators must be strings");
    BiPoly f = parse_poly(g.get<std::string>(), dims, field);
    if (!f.is_zero()) sys.generators.push_back(std::move(f));
  }
  return sys;
}

BiSystem load_system(const std::string& path, const std::optional<FieldSpec>& field_override) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::InvalidInput, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::InvalidInput, path + ": " + e.what());
  }
  return system_from_json(j, field_override);
}

nlohmann::json system_to_json(const BiSystem& sys) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : sys.generators) gens.push_back(g.to_string());
  return {{"n", sys.dims.n}, {"m", sys.dims.m}, {"field", field_to_json(sys.field)}, {"generators", gens}};
}

}  // namespace biproj
