#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "casimir/units.hpp"

namespace casimir {

enum class SignConvention { magnitude, attractive_negative };

const char* to_string(SignConvention sign) noexcept;

/// How a gap compares against the range where ideal parallel plates are a
/// sensible model. Only meaningful for SI constants.
enum class GapPlausibility { plausible, implausible };

/// Separation a between the plates plus the constants it is evaluated with.
class PlateGap {
 public:
  /// Domain error for a <= 0 or non-finite a. With CODATA constants a must
  /// also lie in [1e-12, 1] m.
  PlateGap(double a, PhysicalConstants constants);

  double a() const noexcept { return a_; }
  const PhysicalConstants& constants() const noexcept { return constants_; }

  /// implausible when SI and outside [1e-9, 1e-3] m. Never an error.
  GapPlausibility plausibility() const noexcept;

 private:
  double a_;
  PhysicalConstants constants_;
};

/// Per-mode bookkeeping for standing wave n between the plates.
struct ModeState {
  std::uint64_t n = 0;
  double k_n = 0.0;         // n pi / a
  double p_n = 0.0;         // hbar k_n
  double delta_x_xy = 0.0;  // a / (2 n pi), saturating dx dp = hbar/2
  double n_z = 0.0;         // 1/n
  double area_n = 0.0;      // 4 n^4 pi^2 a^2
  double t = 0.0;           // a / c

  /// L_n, the side of the square with area area_n.
  double side_length() const;
};

/// Energy per plate area. series_value uses the first terms_used modes,
/// closed_form_value the full zeta(4) sum.
struct EnergyDensityResult {
  PlateGap gap;
  double series_value = 0.0;
  double closed_form_value = 0.0;
  std::uint64_t terms_used = 0;
  double truncation_bound = 0.0;
  SignConvention sign_convention = SignConvention::attractive_negative;
};

struct ConvergenceRow {
  std::uint64_t terms = 0;
  double series_value = 0.0;
  double truncation_bound = 0.0;
  double closed_form_value = 0.0;
};

inline constexpr std::uint64_t kDefaultSeriesTerms = 1000;

/// a / c.
double traversal_time(const PlateGap& gap);

/// Domain error for n == 0.
ModeState mode_state(std::uint64_t n, const PlateGap& gap);

/// dE dt / t = hbar c / (2a). Every mode contributes the same amount; the mode
/// index only enters through the area weight.
double per_state_energy_flux(const PlateGap& gap);

/// hbar c / (8 pi^2 a^3), the factor in front of sum n^-4.
double series_prefactor(const PlateGap& gap);

/// Term n of the energy-per-area series, formed as flux / area_n.
double energy_per_area_term(std::uint64_t n, const PlateGap& gap);

/// The first count terms of the energy and area sums. Both sums diverge, so
/// they are only ever exposed term by term.
std::vector<double> energy_term_sequence(const PlateGap& gap, std::uint64_t count);
std::vector<double> area_term_sequence(const PlateGap& gap, std::uint64_t count);

EnergyDensityResult energy_per_area_series(
    const PlateGap& gap, std::uint64_t terms = kDefaultSeriesTerms,
    SignConvention sign = SignConvention::attractive_negative);

/// +-hbar c pi^2 / (720 a^3).
double energy_per_area_closed(const PlateGap& gap,
                              SignConvention sign = SignConvention::attractive_negative);

/// Signed attractive pressure -hbar c pi^2 / (240 a^4).
double force_per_area(const PlateGap& gap);

/// One row per entry of terms, which must be non-empty and strictly increasing.
std::vector<ConvergenceRow> convergence_report(
    const PlateGap& gap, std::span<const std::uint64_t> terms,
    SignConvention sign = SignConvention::attractive_negative);

}  // namespace casimir
