#pragma once

#include <string>
#include <variant>
#include <vector>
#include <span>

#include "casimir/units.hpp"

namespace casimir {

/// Outside length L_o. Never stored as a floating-point infinity.
struct Unbounded {
  friend constexpr bool operator==(Unbounded, Unbounded) = default;
};
using OutsideLength = std::variant<Unbounded, double>;

struct FixedInsidePressure {
  double pressure = 0.0;
};
struct BalancedInsidePressure {};
using InsidePressureSpec = std::variant<FixedInsidePressure, BalancedInsidePressure>;

struct ScenarioInput {
  double inside_length = 0.0;
  OutsideLength outside_length = Unbounded{};
  InsidePressureSpec inside_pressure = BalancedInsidePressure{};
};

enum class ScenarioClass { diverging_outside, balanced_zero_outside };

const char* to_string(ScenarioClass c) noexcept;

struct ScenarioResult {
  double inside_pressure = 0.0;   // P_i
  double outside_pressure = 0.0;  // P_o
  double difference = 0.0;        // P_i - P_o
  ScenarioClass classification = ScenarioClass::diverging_outside;
  std::string note;
};

struct LimitSweepRow {
  double inside_length = 0.0;
  double situation_one_outside_pressure = 0.0;
  double situation_two_inside_pressure = 0.0;
};

struct CrossoverResult {
  double closed_form = 0.0;
  double bisection = 0.0;
  int bisection_iterations = 0;
};

/// Text recorded with every crossover result.
inline constexpr const char* kVolumetricDensityDefinition =
    "|energy_per_area| / gap";

/// -hbar c pi^2 / (240 L_i^4). Domain error for L_i <= 0.
double pressure_difference(const PhysicalConstants& constants, double inside_length);

/// Non-negative inside pressure held fixed: P_o = P_i + hbar c pi^2/(240 L_i^4),
/// which grows without bound as L_i -> 0. Precondition error for P_i < 0.
ScenarioResult situation_one(const PhysicalConstants& constants, double inside_length,
                             double inside_pressure);

/// Inside pressure set to the full attractive pressure; P_o cancels to exactly 0.
ScenarioResult situation_two(const PhysicalConstants& constants, double inside_length);

/// Dispatches on ScenarioInput. A finite L_o must exceed L_i.
ScenarioResult evaluate(const PhysicalConstants& constants, const ScenarioInput& input);

/// grid must be non-empty, positive and strictly decreasing.
std::vector<LimitSweepRow> limit_sweep(const PhysicalConstants& constants,
                                       std::span<const double> inside_lengths,
                                       double fixed_inside_pressure);

/// Gap a* at which |energy_per_area_closed(a)| / a equals rho_vac, by the
/// fourth-root closed form and independently by bisection.
CrossoverResult cosmological_crossover(const PhysicalConstants& constants, double rho_vac);

}  // namespace casimir
