#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace casimir {

enum class ConstantsSource { codata, natural, custom };

const char* to_string(ConstantsSource source) noexcept;

/// hbar in J s and c in m/s. Immutable once built.
class PhysicalConstants {
 public:
  /// Throws a domain error unless both values are positive and finite.
  static PhysicalConstants custom(double hbar, double c);

  double hbar() const noexcept { return hbar_; }
  double c() const noexcept { return c_; }
  ConstantsSource source() const noexcept { return source_; }

  friend bool operator==(const PhysicalConstants&, const PhysicalConstants&) = default;

 private:
  friend PhysicalConstants codata_constants() noexcept;
  friend PhysicalConstants natural_units() noexcept;

  PhysicalConstants(double hbar, double c, ConstantsSource source) noexcept
      : hbar_(hbar), c_(c), source_(source) {}

  double hbar_;
  double c_;
  ConstantsSource source_;
};

/// CODATA 2018: hbar = 1.054571817e-34 J s, c = 299792458 m/s (exact).
PhysicalConstants codata_constants() noexcept;

/// hbar = c = 1. Lengths are then dimensionless numbers in the same code path.
PhysicalConstants natural_units() noexcept;

enum class UnitSystem { si, natural };

const char* to_string(UnitSystem units) noexcept;
PhysicalConstants constants_for(UnitSystem units) noexcept;

/// Exponents over the mechanical base dimensions (length, mass, time).
struct Dimension {
  std::int8_t length = 0;
  std::int8_t mass = 0;
  std::int8_t time = 0;

  friend constexpr bool operator==(Dimension, Dimension) = default;

  friend constexpr Dimension operator*(Dimension a, Dimension b) {
    return {static_cast<std::int8_t>(a.length + b.length),
            static_cast<std::int8_t>(a.mass + b.mass),
            static_cast<std::int8_t>(a.time + b.time)};
  }
  friend constexpr Dimension operator/(Dimension a, Dimension b) {
    return {static_cast<std::int8_t>(a.length - b.length),
            static_cast<std::int8_t>(a.mass - b.mass),
            static_cast<std::int8_t>(a.time - b.time)};
  }
};

namespace dims {
inline constexpr Dimension dimensionless{0, 0, 0};
inline constexpr Dimension length{1, 0, 0};
inline constexpr Dimension time{0, 0, 1};
inline constexpr Dimension area{2, 0, 0};
inline constexpr Dimension wavenumber{-1, 0, 0};
inline constexpr Dimension speed{1, 0, -1};
inline constexpr Dimension energy{2, 1, -2};
inline constexpr Dimension momentum{1, 1, -1};
inline constexpr Dimension action{2, 1, -1};
inline constexpr Dimension energy_per_area{0, 1, -2};
inline constexpr Dimension pressure{-1, 1, -2};
// Same base exponents as pressure (J/m^3 == Pa).
inline constexpr Dimension energy_density{-1, 1, -2};
}  // namespace dims

/// Name of the first matching entry in dims, or "L^a M^b T^c" otherwise.
std::string to_string(Dimension dimension);

/// A real value tagged with its dimension. Addition and comparison require
/// equal dimensions; products and quotients compose them.
class Quantity {
 public:
  constexpr Quantity(double value, Dimension dimension) noexcept
      : value_(value), dimension_(dimension) {}

  constexpr double value() const noexcept { return value_; }
  constexpr Dimension dimension() const noexcept { return dimension_; }

  /// Returns the value after checking the dimension; dimension error otherwise.
  double in(Dimension expected) const;

  Quantity& operator+=(const Quantity& other);
  Quantity& operator-=(const Quantity& other);

  friend Quantity operator+(Quantity a, const Quantity& b) { return a += b; }
  friend Quantity operator-(Quantity a, const Quantity& b) { return a -= b; }
  friend Quantity operator-(const Quantity& a) { return {-a.value_, a.dimension_}; }

  friend constexpr Quantity operator*(const Quantity& a, const Quantity& b) {
    return {a.value_ * b.value_, a.dimension_ * b.dimension_};
  }
  friend constexpr Quantity operator/(const Quantity& a, const Quantity& b) {
    return {a.value_ / b.value_, a.dimension_ / b.dimension_};
  }
  friend constexpr Quantity operator*(double s, const Quantity& q) {
    return {s * q.value_, q.dimension_};
  }
  friend constexpr Quantity operator*(const Quantity& q, double s) {
    return {q.value_ * s, q.dimension_};
  }
  friend constexpr Quantity operator/(const Quantity& q, double s) {
    return {q.value_ / s, q.dimension_};
  }

 private:
  double value_;
  Dimension dimension_;
};

Quantity pow(const Quantity& q, int exponent);

inline Quantity hbar_of(const PhysicalConstants& k) { return {k.hbar(), dims::action}; }
inline Quantity c_of(const PhysicalConstants& k) { return {k.c(), dims::speed}; }
inline Quantity meters(double value) { return {value, dims::length}; }

/// Parses "<decimal>[ws]<suffix>" with suffix one of m, mm, um, nm, pm and
/// returns the length in meters. Scientific notation is accepted for every
/// suffix. Parse errors name the offending token; a non-positive value is a
/// domain error.
Quantity parse_length(std::string_view text);

/// Locale-independent parse of a plain finite decimal number (no suffix).
double parse_number(std::string_view text);

}  // namespace casimir
