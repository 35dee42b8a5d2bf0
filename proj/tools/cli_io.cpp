#include "cli_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace casimir::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

template <typename Int>
Int parse_integer(std::string_view text, std::string_view what) {
  Int value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InputError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

void RunConfig::validate() const {
  if (precision < 4 || precision > 17) {
    throw InputError("precision must be in [4, 17], got " + std::to_string(precision));
  }
  if (default_n < 1) throw InputError("default_n must be at least 1");
}

const char* to_string(OutputFormat format) noexcept {
  switch (format) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::text: return "text";
  }
  return "json";
}

OutputFormat parse_format(std::string_view text) {
  if (text == "json") return OutputFormat::json;
  if (text == "csv") return OutputFormat::csv;
  if (text == "text") return OutputFormat::text;
  throw InputError("unknown output format '" + std::string(text) + "'");
}

ck_unit_system parse_units(std::string_view text) {
  if (text == "si") return CK_UNITS_SI;
  if (text == "natural") return CK_UNITS_NATURAL;
  throw InputError("unknown unit system '" + std::string(text) + "'");
}

const char* units_name(ck_unit_system units) noexcept {
  return units == CK_UNITS_NATURAL ? "natural" : "si";
}

RunConfig parse_config_text(std::string_view text, RunConfig base) {
  int line_number = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_number;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw InputError("config line " + std::to_string(line_number) + ": expected key = value");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key == "units") {
      base.units = parse_units(value);
    } else if (key == "precision") {
      base.precision = parse_integer<int>(value, "precision");
    } else if (key == "format") {
      base.format = parse_format(value);
    } else if (key == "default_n") {
      base.default_n = parse_integer<std::uint64_t>(value, "default_n");
    } else {
      throw InputError("config line " + std::to_string(line_number) + ": unknown key '" +
                       std::string(key) + "'");
    }
  }
  base.validate();
  return base;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read config file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str(), base);
}

std::string format_number(double value, int precision) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value,
                                       std::chars_format::scientific, precision - 1);
  if (ec != std::errc{}) return "nan";
  return std::string(buffer, ptr);
}

Json OutputEnvelope::to_json() const {
  Json j = Json::object();
  j["command"] = command;
  j["inputs"] = inputs;
  j["results"] = results;
  j["metadata"] = metadata;
  return j;
}

OutputEnvelope OutputEnvelope::from_json(const Json& j) {
  OutputEnvelope e;
  e.command = j.at("command").get<std::string>();
  e.inputs = j.at("inputs");
  e.results = j.at("results");
  e.metadata = j.at("metadata");
  return e;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (const char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  quoted += '"';
  return quoted;
}

std::string scalar_text(const Json& v, int precision) {
  if (v.is_number_integer()) return v.dump();
  if (v.is_number()) return format_number(v.get<double>(), precision);
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

bool is_scalar(const Json& v) { return !v.is_object() && !v.is_array(); }

void write_table(std::ostream& out, const Json& rows, int precision, const char* sep,
                 bool escape) {
  if (rows.empty()) return;
  bool first = true;
  for (const auto& [key, _] : rows.front().items()) {
    out << (first ? "" : sep) << key;
    first = false;
  }
  out << '\n';
  for (const auto& row : rows) {
    first = true;
    for (const auto& [_, value] : row.items()) {
      const auto text = scalar_text(value, precision);
      out << (first ? "" : sep) << (escape ? csv_escape(text) : text);
      first = false;
    }
    out << '\n';
  }
}

}  // namespace

std::string render(const OutputEnvelope& envelope, const RunConfig& config) {
  std::ostringstream out;
  const auto& results = envelope.results;
  const bool tabular = results.contains("rows") && results["rows"].is_array();

  switch (config.format) {
    case OutputFormat::json:
      out << envelope.to_json().dump(2) << '\n';
      break;

    case OutputFormat::csv:
      if (tabular) {
        write_table(out, results["rows"], config.precision, ",", true);
      } else {
        Json row = Json::object();
        for (const auto& [key, value] : results.items()) {
          if (is_scalar(value)) row[key] = value;
        }
        write_table(out, Json::array({row}), config.precision, ",", true);
      }
      break;

    case OutputFormat::text:
      out << "# " << envelope.command << '\n';
      for (const auto& [key, value] : results.items()) {
        if (is_scalar(value)) out << key << ": " << scalar_text(value, config.precision) << '\n';
      }
      if (tabular) write_table(out, results["rows"], config.precision, "  ", false);
      break;
  }
  return out.str();
}

}  // namespace casimir::cli
