#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "biproj/admissible.hpp"
#include "biproj/error.hpp"

namespace biproj {

enum class OutputFormat { Json, Text };

struct RunConfig {
  std::string command;
  std::string system_path;
  std::optional<BiDegree> degree;
  std::optional<FieldSpec> field;
  std::uint64_t seed = kDefaultSeed;
  std::optional<double> tol;
  std::string order = "lex";
  std::optional<OutputFormat> out;  // hilbert defaults to text (CSV), others to JSON
  std::optional<std::string> h;
  int amax = 4;
  int bmax = 4;
  std::string point;
  bool numeric = false;
  bool randomized = false;
  bool identity = false;  // bigin without coordinate change
};

struct CommandOutput {
  int exit_code = 0;
  nlohmann::json json;
  std::string text;

  /// The rendering selected by the config.
  std::string rendered(const RunConfig& config) const;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitInput = 3;

int exit_code_for(Errc code);

/// Runs one command; errors become exit codes with an "error" object.
CommandOutput run_command(const RunConfig& config);

}  // namespace biproj
