#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "casimir/casimir_kit.h"

namespace casimir::cli {

using Json = nlohmann::ordered_json;

enum class OutputFormat { json, csv, text };

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;

/// Raised for bad user input anywhere in the CLI layer; maps to kExitInput.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  ck_unit_system units = CK_UNITS_SI;
  int precision = 10;
  OutputFormat format = OutputFormat::json;
  std::uint64_t default_n = 1000;

  /// precision in [4, 17], default_n >= 1; InputError otherwise.
  void validate() const;
};

const char* to_string(OutputFormat format) noexcept;
OutputFormat parse_format(std::string_view text);
ck_unit_system parse_units(std::string_view text);
const char* units_name(ck_unit_system units) noexcept;

/// Applies "key = value" lines (units, precision, format, default_n) on top
/// of base. Blank lines and text after '#' are ignored.
RunConfig parse_config_text(std::string_view text, RunConfig base);
RunConfig load_config_file(const std::string& path, RunConfig base);

/// Exactly `precision` significant digits in scientific notation, '.' as the
/// decimal separator regardless of locale.
std::string format_number(double value, int precision);

struct OutputEnvelope {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  Json metadata = Json::object();

  Json to_json() const;
  static OutputEnvelope from_json(const Json& j);

  friend bool operator==(const OutputEnvelope&, const OutputEnvelope&) = default;
};

/// JSON: the envelope, pretty-printed with round-trip precision doubles.
/// CSV: header plus rows from results["rows"], or one row of the scalar
/// results. Text: "key: value" lines followed by any table.
std::string render(const OutputEnvelope& envelope, const RunConfig& config);

/// Entry point shared by the executable and the tests. Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace casimir::cli
