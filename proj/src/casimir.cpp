#include "casimir/casimir.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "casimir/error.hpp"
#include "casimir/series.hpp"

namespace casimir {

using std::numbers::pi;

const char* to_string(SignConvention sign) noexcept {
  return sign == SignConvention::magnitude ? "magnitude" : "attractive_negative";
}

PlateGap::PlateGap(double a, PhysicalConstants constants) : a_(a), constants_(constants) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    fail(ErrorKind::domain, "gap must be positive, got " + std::to_string(a));
  }
  if (constants.source() == ConstantsSource::codata && (a < 1e-12 || a > 1.0)) {
    fail(ErrorKind::domain, "gap must lie in [1e-12, 1] m");
  }
}

GapPlausibility PlateGap::plausibility() const noexcept {
  if (constants_.source() != ConstantsSource::codata) return GapPlausibility::plausible;
  return (a_ < 1e-9 || a_ > 1e-3) ? GapPlausibility::implausible : GapPlausibility::plausible;
}

double ModeState::side_length() const { return std::sqrt(area_n); }

double traversal_time(const PlateGap& gap) {
  return (meters(gap.a()) / c_of(gap.constants())).in(dims::time);
}

ModeState mode_state(std::uint64_t n, const PlateGap& gap) {
  if (n == 0) fail(ErrorKind::domain, "mode index must be at least 1");
  const double a = gap.a();
  const double hbar = gap.constants().hbar();
  const double nd = static_cast<double>(n);

  ModeState m;
  m.n = n;
  m.k_n = nd * pi / a;
  m.p_n = hbar * m.k_n;
  m.delta_x_xy = a / (2.0 * nd * pi);
  m.n_z = 1.0 / nd;
  m.area_n = 4.0 * (nd * nd) * (nd * nd) * (pi * pi) * (a * a);
  m.t = traversal_time(gap);
  return m;
}

double per_state_energy_flux(const PlateGap& gap) {
  const auto& k = gap.constants();
  return (hbar_of(k) * c_of(k) / (2.0 * meters(gap.a()))).in(dims::energy);
}

double series_prefactor(const PlateGap& gap) {
  const auto& k = gap.constants();
  return (hbar_of(k) * c_of(k) / (8.0 * pi * pi * pow(meters(gap.a()), 3)))
      .in(dims::energy_per_area);
}

double energy_per_area_term(std::uint64_t n, const PlateGap& gap) {
  return per_state_energy_flux(gap) / mode_state(n, gap).area_n;
}

std::vector<double> energy_term_sequence(const PlateGap& gap, std::uint64_t count) {
  return std::vector<double>(count, per_state_energy_flux(gap));
}

std::vector<double> area_term_sequence(const PlateGap& gap, std::uint64_t count) {
  std::vector<double> areas;
  areas.reserve(count);
  for (std::uint64_t n = 1; n <= count; ++n) areas.push_back(mode_state(n, gap).area_n);
  return areas;
}

namespace {

double apply_sign(double magnitude, SignConvention sign) {
  return sign == SignConvention::magnitude ? magnitude : -magnitude;
}

}  // namespace

double energy_per_area_closed(const PlateGap& gap, SignConvention sign) {
  const auto& k = gap.constants();
  const double magnitude =
      (hbar_of(k) * c_of(k) * (pi * pi) / (720.0 * pow(meters(gap.a()), 3)))
          .in(dims::energy_per_area);
  return apply_sign(magnitude, sign);
}

EnergyDensityResult energy_per_area_series(const PlateGap& gap, std::uint64_t terms,
                                           SignConvention sign) {
  if (terms == 0) fail(ErrorKind::domain, "number of terms must be at least 1");
  const double prefactor = series_prefactor(gap);
  return {
      .gap = gap,
      .series_value = apply_sign(prefactor * partial_sum_inverse_powers(4.0, terms), sign),
      .closed_form_value = energy_per_area_closed(gap, sign),
      .terms_used = terms,
      .truncation_bound = prefactor * tail_bound(4.0, terms).upper,
      .sign_convention = sign,
  };
}

double force_per_area(const PlateGap& gap) {
  const auto& k = gap.constants();
  return -(hbar_of(k) * c_of(k) * (pi * pi) / (240.0 * pow(meters(gap.a()), 4)))
              .in(dims::pressure);
}

std::vector<ConvergenceRow> convergence_report(const PlateGap& gap,
                                               std::span<const std::uint64_t> terms,
                                               SignConvention sign) {
  if (terms.empty()) fail(ErrorKind::domain, "term list is empty");
  std::vector<ConvergenceRow> rows;
  rows.reserve(terms.size());
  std::uint64_t previous = 0;
  for (const auto n : terms) {
    if (n == 0) fail(ErrorKind::domain, "number of terms must be at least 1");
    if (n <= previous) fail(ErrorKind::domain, "term counts must be strictly increasing");
    previous = n;
    const auto r = energy_per_area_series(gap, n, sign);
    rows.push_back({n, r.series_value, r.truncation_bound, r.closed_form_value});
  }
  return rows;
}

}  // namespace casimir
