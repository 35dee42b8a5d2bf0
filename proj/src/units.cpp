#include "casimir/units.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <system_error>
#include <utility>

#include "casimir/error.hpp"

namespace casimir {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::parse: return "parse error";
    case ErrorKind::domain: return "domain error";
    case ErrorKind::arity: return "arity error";
    case ErrorKind::unsupported_argument: return "unsupported argument";
    case ErrorKind::precondition: return "precondition error";
    case ErrorKind::dimension: return "dimension error";
  }
  return "error";
}

const char* to_string(ConstantsSource source) noexcept {
  switch (source) {
    case ConstantsSource::codata: return "codata2018";
    case ConstantsSource::natural: return "natural";
    case ConstantsSource::custom: return "custom";
  }
  return "unknown";
}

const char* to_string(UnitSystem units) noexcept {
  return units == UnitSystem::si ? "si" : "natural";
}

PhysicalConstants PhysicalConstants::custom(double hbar, double c) {
  if (!(std::isfinite(hbar) && hbar > 0.0) || !(std::isfinite(c) && c > 0.0)) {
    fail(ErrorKind::domain, "hbar and c must be positive and finite");
  }
  return {hbar, c, ConstantsSource::custom};
}

PhysicalConstants codata_constants() noexcept {
  return {1.054571817e-34, 299792458.0, ConstantsSource::codata};
}

PhysicalConstants natural_units() noexcept { return {1.0, 1.0, ConstantsSource::natural}; }

PhysicalConstants constants_for(UnitSystem units) noexcept {
  return units == UnitSystem::si ? codata_constants() : natural_units();
}

std::string to_string(Dimension d) {
  static constexpr std::array<std::pair<Dimension, const char*>, 11> kNamed{{
      {dims::dimensionless, "dimensionless"},
      {dims::length, "length"},
      {dims::time, "time"},
      {dims::area, "area"},
      {dims::wavenumber, "wavenumber"},
      {dims::speed, "speed"},
      {dims::energy, "energy"},
      {dims::momentum, "momentum"},
      {dims::action, "action"},
      {dims::energy_per_area, "energy_per_area"},
      {dims::pressure, "pressure"},
  }};
  for (const auto& [dim, name] : kNamed) {
    if (dim == d) return name;
  }
  return "L^" + std::to_string(d.length) + " M^" + std::to_string(d.mass) + " T^" +
         std::to_string(d.time);
}

double Quantity::in(Dimension expected) const {
  if (dimension_ != expected) {
    fail(ErrorKind::dimension,
         "expected " + to_string(expected) + ", got " + to_string(dimension_));
  }
  return value_;
}

Quantity& Quantity::operator+=(const Quantity& other) {
  if (dimension_ != other.dimension_) {
    fail(ErrorKind::dimension, "cannot add " + to_string(other.dimension_) + " to " +
                                   to_string(dimension_));
  }
  value_ += other.value_;
  return *this;
}

Quantity& Quantity::operator-=(const Quantity& other) {
  if (dimension_ != other.dimension_) {
    fail(ErrorKind::dimension, "cannot subtract " + to_string(other.dimension_) +
                                   " from " + to_string(dimension_));
  }
  value_ -= other.value_;
  return *this;
}

Quantity pow(const Quantity& q, int exponent) {
  Quantity result{1.0, dims::dimensionless};
  const Quantity factor = exponent >= 0 ? q : Quantity{1.0, dims::dimensionless} / q;
  for (int i = 0; i < std::abs(exponent); ++i) result = result * factor;
  return result;
}

namespace {

bool is_space(char ch) { return ch == ' ' || ch == '\t'; }

std::string_view trim(std::string_view text) {
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  return text;
}

// Divisors are exact doubles, so one rounding per conversion.
struct Suffix {
  std::string_view name;
  double divisor;
};
constexpr std::array<Suffix, 5> kSuffixes{{
    {"m", 1.0}, {"mm", 1e3}, {"um", 1e6}, {"nm", 1e9}, {"pm", 1e12},
}};

// Parses the leading number of text, returning it and the unconsumed rest.
std::pair<double, std::string_view> leading_number(std::string_view text,
                                                   std::string_view whole) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  // from_chars rejects a leading '+'.
  if (first != last && *first == '+') ++first;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(first, last, value, std::chars_format::general);
  if (ec == std::errc::result_out_of_range) {
    fail(ErrorKind::domain, "value out of range: '" + std::string(whole) + "'");
  }
  if (ec != std::errc{} || ptr == first) {
    fail(ErrorKind::parse, "expected a number, got '" + std::string(whole) + "'");
  }
  if (!std::isfinite(value)) {
    fail(ErrorKind::parse, "expected a finite number, got '" + std::string(whole) + "'");
  }
  return {value, std::string_view(ptr, static_cast<std::size_t>(last - ptr))};
}

}  // namespace

Quantity parse_length(std::string_view text) {
  const std::string_view body = trim(text);
  if (body.empty()) fail(ErrorKind::parse, "empty length");
  auto [value, rest] = leading_number(body, body);
  rest = trim(rest);
  if (rest.empty()) {
    fail(ErrorKind::parse, "missing unit suffix in '" + std::string(body) +
                               "' (expected one of m, mm, um, nm, pm)");
  }
  for (const auto& suffix : kSuffixes) {
    if (rest == suffix.name) {
      if (!(value > 0.0)) {
        fail(ErrorKind::domain, "length must be positive, got '" + std::string(body) + "'");
      }
      return meters(value / suffix.divisor);
    }
  }
  fail(ErrorKind::parse, "unknown unit suffix '" + std::string(rest) + "'");
}

double parse_number(std::string_view text) {
  const std::string_view body = trim(text);
  if (body.empty()) fail(ErrorKind::parse, "empty number");
  const auto [value, rest] = leading_number(body, body);
  if (!trim(rest).empty()) {
    fail(ErrorKind::parse, "unexpected trailing text '" + std::string(trim(rest)) + "'");
  }
  return value;
}

}  // namespace casimir
