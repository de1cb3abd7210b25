#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "biproj/bipoly.hpp"

namespace biproj {

/// "Q" or {"Fp": p}.
FieldSpec field_from_json(const nlohmann::json& j);
nlohmann::json field_to_json(const FieldSpec& f);
/// Command-line spelling: "Q", "Fp:65521" or "65521".
FieldSpec parse_field_flag(const std::string& text);

/// {"n": int, "m": int, "field": ..., "generators": [expr, ...]}.
/// Zero generators are dropped. Throws Errc::InvalidInput / SyntaxError /
/// NotBihomogeneous.
BiSystem system_from_json(const nlohmann::json& j,
                          const std::optional<FieldSpec>& field_override = std::nullopt);
BiSystem load_system(const std::string& path,
                     const std::optional<FieldSpec>& field_override = std::nullopt);
nlohmann::json system_to_json(const BiSystem& sys);

}  // namespace biproj
