#include "casimir/paradox.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "casimir/error.hpp"

namespace casimir {

using std::numbers::pi;

const char* to_string(ScenarioClass c) noexcept {
  return c == ScenarioClass::diverging_outside ? "diverging_outside"
                                               : "balanced_zero_outside";
}

namespace {

void require_inside_length(double inside_length) {
  if (!(inside_length > 0.0) || !std::isfinite(inside_length)) {
    fail(ErrorKind::domain, "inside length must be positive");
  }
}

// hbar c pi^2 / (240 L^4), the magnitude of the attractive pressure.
double attraction(const PhysicalConstants& k, double inside_length) {
  return (hbar_of(k) * c_of(k) * (pi * pi) / (240.0 * pow(meters(inside_length), 4)))
      .in(dims::pressure);
}

// |E/A| / a with E/A = hbar c pi^2 / (720 a^3).
double volumetric_energy_density(const PhysicalConstants& k, double a) {
  const Quantity per_area = hbar_of(k) * c_of(k) * (pi * pi) / (720.0 * pow(meters(a), 3));
  return (per_area / meters(a)).in(dims::energy_density);
}

}  // namespace

double pressure_difference(const PhysicalConstants& constants, double inside_length) {
  require_inside_length(inside_length);
  return -attraction(constants, inside_length);
}

ScenarioResult situation_one(const PhysicalConstants& constants, double inside_length,
                             double inside_pressure) {
  require_inside_length(inside_length);
  if (!(inside_pressure >= 0.0) || !std::isfinite(inside_pressure)) {
    fail(ErrorKind::precondition, "situation one requires P_i >= 0");
  }
  const double difference = pressure_difference(constants, inside_length);
  return {
      .inside_pressure = inside_pressure,
      .outside_pressure = inside_pressure - difference,
      .difference = difference,
      .classification = ScenarioClass::diverging_outside,
      .note = "P_o = P_i + hbar c pi^2 / (240 L_i^4) grows without bound as L_i -> 0 "
              "for any fixed P_i >= 0, so P_i - P_o -> -infinity",
  };
}

ScenarioResult situation_two(const PhysicalConstants& constants, double inside_length) {
  const double difference = pressure_difference(constants, inside_length);
  // P_o = P_i + attraction with P_i = -attraction cancels identically.
  return {
      .inside_pressure = difference,
      .outside_pressure = 0.0,
      .difference = difference,
      .classification = ScenarioClass::balanced_zero_outside,
      .note = "P_i = -hbar c pi^2 / (240 L_i^4) < 0 cancels the attraction, so P_o = 0",
  };
}

ScenarioResult evaluate(const PhysicalConstants& constants, const ScenarioInput& input) {
  require_inside_length(input.inside_length);
  if (const auto* outside = std::get_if<double>(&input.outside_length)) {
    if (!(*outside > input.inside_length)) {
      fail(ErrorKind::domain, "finite outside length must exceed the inside length");
    }
  }
  if (const auto* fixed = std::get_if<FixedInsidePressure>(&input.inside_pressure)) {
    return situation_one(constants, input.inside_length, fixed->pressure);
  }
  return situation_two(constants, input.inside_length);
}

std::vector<LimitSweepRow> limit_sweep(const PhysicalConstants& constants,
                                       std::span<const double> inside_lengths,
                                       double fixed_inside_pressure) {
  if (inside_lengths.empty()) fail(ErrorKind::domain, "sweep grid is empty");
  if (!(fixed_inside_pressure >= 0.0)) {
    fail(ErrorKind::precondition, "situation one requires P_i >= 0");
  }
  std::vector<LimitSweepRow> rows;
  rows.reserve(inside_lengths.size());
  for (std::size_t i = 0; i < inside_lengths.size(); ++i) {
    const double length = inside_lengths[i];
    require_inside_length(length);
    if (i > 0 && !(length < inside_lengths[i - 1])) {
      fail(ErrorKind::domain, "sweep grid must be strictly decreasing");
    }
    rows.push_back({length,
                    situation_one(constants, length, fixed_inside_pressure).outside_pressure,
                    situation_two(constants, length).inside_pressure});
  }
  return rows;
}

CrossoverResult cosmological_crossover(const PhysicalConstants& constants, double rho_vac) {
  if (!(rho_vac > 0.0) || !std::isfinite(rho_vac)) {
    fail(ErrorKind::domain, "vacuum energy density must be positive");
  }
  CrossoverResult result;
  const double hbar_c = constants.hbar() * constants.c();
  result.closed_form = std::pow(hbar_c * pi * pi / (720.0 * rho_vac), 0.25);

  // The density falls monotonically with a; bracket geometrically, then bisect.
  double lo = 1.0;
  double hi = 1.0;
  while (volumetric_energy_density(constants, lo) < rho_vac) lo /= 10.0;
  while (volumetric_energy_density(constants, hi) > rho_vac) hi *= 10.0;
  int iterations = 0;
  while (hi / lo - 1.0 > 1e-15 && iterations < 200) {
    const double mid = std::sqrt(lo * hi);
    if (mid <= lo || mid >= hi) break;
    if (volumetric_energy_density(constants, mid) > rho_vac) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++iterations;
  }
  result.bisection = std::sqrt(lo * hi);
  result.bisection_iterations = iterations;
  return result;
}

}  // namespace casimir
