#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "casimir/casimir.hpp"
#include "casimir/error.hpp"
#include "casimir/series.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace casimir;
using std::numbers::pi;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected casimir::Error");
  return ErrorKind::parse;
}

const PlateGap natural_gap(double a) { return PlateGap(a, natural_units()); }
const PlateGap si_gap(double a) { return PlateGap(a, codata_constants()); }

}  // namespace

TEST_CASE("PlateGap validation") {
  CHECK(kind_of([] { natural_gap(0.0); }) == ErrorKind::domain);
  CHECK(kind_of([] { natural_gap(-1.0); }) == ErrorKind::domain);
  CHECK(kind_of([] { si_gap(1e-13); }) == ErrorKind::domain);
  CHECK(kind_of([] { si_gap(2.0); }) == ErrorKind::domain);
  CHECK(natural_gap(1e6).plausibility() == GapPlausibility::plausible);
  CHECK(si_gap(1e-6).plausibility() == GapPlausibility::plausible);
  CHECK(si_gap(1e-10).plausibility() == GapPlausibility::implausible);
  CHECK(si_gap(0.5).plausibility() == GapPlausibility::implausible);
}

TEST_CASE("traversal_time") {
  CHECK(traversal_time(natural_gap(1.0)) == 1.0);
  CHECK(traversal_time(si_gap(1e-6)) == doctest::Approx(oracle::kTraversalTime1um).epsilon(1e-15));
  CHECK(traversal_time(si_gap(2e-6)) == 2.0 * traversal_time(si_gap(1e-6)));
}

TEST_CASE("mode_state examples") {
  const auto m1 = mode_state(1, natural_gap(1.0));
  CHECK(m1.k_n == doctest::Approx(pi));
  CHECK(m1.p_n == doctest::Approx(pi));
  CHECK(m1.delta_x_xy == doctest::Approx(1.0 / (2.0 * pi)));
  CHECK(m1.n_z == 1.0);
  CHECK(m1.area_n == doctest::Approx(4.0 * pi * pi));
  CHECK(m1.side_length() == doctest::Approx(2.0 * pi));
  CHECK(m1.t == 1.0);

  CHECK(mode_state(2, natural_gap(1.0)).area_n == doctest::Approx(64.0 * pi * pi));
  CHECK(mode_state(1, natural_gap(2.0 * pi)).delta_x_xy == doctest::Approx(1.0));
  CHECK(mode_state(3, natural_gap(1.0)).n_z == doctest::Approx(1.0 / 3.0));
  CHECK(kind_of([] { mode_state(0, natural_gap(1.0)); }) == ErrorKind::domain);
}

TEST_CASE("property: uncertainty product and area chain") {
  const auto k = codata_constants();
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<std::uint64_t> n_dist(1, 1000000);
  std::uniform_int_distribution<std::uint64_t> small_n(1, 10000);
  for (int i = 0; i < 5000; ++i) {
    const auto gap = PlateGap(oracle::log_uniform(rng, 1e-9, 1e-3), k);
    const auto m = mode_state(n_dist(rng), gap);
    CHECK(oracle::relative_error(m.delta_x_xy * m.p_n, k.hbar() / 2.0) <= 1e-14);
    CHECK(oracle::relative_error(m.k_n, static_cast<double>(m.n) * pi / gap.a()) == 0.0);

    const auto ms = mode_state(small_n(rng), gap);
    const double side = gap.a() / (ms.delta_x_xy * ms.n_z) * gap.a();
    CHECK(oracle::relative_error(side * side, ms.area_n) <= 1e-12);
  }
}

TEST_CASE("per_state_energy_flux") {
  CHECK(per_state_energy_flux(natural_gap(1.0)) == 0.5);
  CHECK(per_state_energy_flux(natural_gap(2.0)) == 0.25);
  CHECK(per_state_energy_flux(si_gap(1e-6)) == doctest::Approx(oracle::kFlux1um).epsilon(1e-14));

  const auto terms = energy_term_sequence(natural_gap(1.0), 5);
  REQUIRE(terms.size() == 5);
  for (double t : terms) CHECK(t == 0.5);
  const auto areas = area_term_sequence(natural_gap(1.0), 3);
  CHECK(areas[2] / areas[0] == doctest::Approx(81.0));
}

TEST_CASE("property: termwise identity flux / area_n = prefactor n^-4") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> n_dist(1, 10000);
  for (int i = 0; i < 2000; ++i) {
    const auto gap = si_gap(oracle::log_uniform(rng, 1e-9, 1e-3));
    const auto n = n_dist(rng);
    const double expected = series_prefactor(gap) * std::pow(static_cast<double>(n), -4.0);
    CHECK(oracle::relative_error(energy_per_area_term(n, gap), expected) <= 1e-13);
  }
}

TEST_CASE("energy_per_area_series") {
  const auto r1 = energy_per_area_series(natural_gap(1.0), 1, SignConvention::magnitude);
  CHECK(r1.series_value == doctest::Approx(1.0 / (8.0 * pi * pi)).epsilon(1e-15));
  CHECK(r1.terms_used == 1);

  const auto r100 = energy_per_area_series(natural_gap(1.0), 100, SignConvention::magnitude);
  CHECK(std::fabs(r100.series_value - pi * pi / 720.0) <= 1.0 / (8.0 * pi * pi * 3.0 * 1e6));

  const auto si = energy_per_area_series(si_gap(1e-6), 1000, SignConvention::attractive_negative);
  CHECK(si.closed_form_value == doctest::Approx(-oracle::kEnergyPerArea1um).epsilon(1e-14));
  CHECK(std::fabs(si.closed_form_value - si.series_value) <= si.truncation_bound);
  CHECK(si.series_value < 0.0);
  CHECK(si.sign_convention == SignConvention::attractive_negative);

  // Terms match the mode-by-mode construction for small n.
  const auto gap = si_gap(1e-6);
  double by_modes = 0.0;
  for (std::uint64_t n = 5; n >= 1; --n) by_modes += energy_per_area_term(n, gap);
  CHECK(energy_per_area_series(gap, 5, SignConvention::magnitude).series_value ==
        doctest::Approx(by_modes).epsilon(1e-14));

  CHECK(kind_of([] { energy_per_area_series(natural_gap(1.0), 0); }) == ErrorKind::domain);
}

TEST_CASE("property: series bracket and sign contract") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<std::uint64_t> n_dist(1, 1000);
  for (int i = 0; i < 500; ++i) {
    const auto gap = si_gap(oracle::log_uniform(rng, 1e-9, 1e-3));
    const auto n = n_dist(rng);
    const auto mag = energy_per_area_series(gap, n, SignConvention::magnitude);
    const auto neg = energy_per_area_series(gap, n, SignConvention::attractive_negative);
    const auto tail = tail_bound(4, n);
    const double pre = series_prefactor(gap);
    const double gap_value = mag.closed_form_value - mag.series_value;
    CHECK(gap_value >= pre * tail.lower);
    CHECK(gap_value <= pre * tail.upper);
    CHECK(std::fabs(mag.series_value) <= std::fabs(mag.closed_form_value));
    CHECK(std::fabs(mag.closed_form_value - mag.series_value) <= mag.truncation_bound);
    CHECK(mag.series_value >= 0.0);
    CHECK(neg.series_value <= 0.0);
    CHECK(-neg.series_value == mag.series_value);
    CHECK(-neg.closed_form_value == mag.closed_form_value);
  }
}

TEST_CASE("energy_per_area_closed") {
  CHECK(energy_per_area_closed(natural_gap(1.0), SignConvention::magnitude) ==
        doctest::Approx(0.01370778389040189).epsilon(1e-15));
  CHECK(energy_per_area_closed(si_gap(1e-6)) ==
        doctest::Approx(-oracle::kEnergyPerArea1um).epsilon(1e-14));
  const double e1 = energy_per_area_closed(natural_gap(1.0));
  CHECK(energy_per_area_closed(natural_gap(2.0)) == doctest::Approx(e1 / 8.0).epsilon(1e-15));
}

TEST_CASE("force_per_area") {
  const double f = force_per_area(si_gap(1e-6));
  CHECK(f == doctest::Approx(-oracle::kForcePerArea1um).epsilon(1e-14));
  CHECK(oracle::relative_error(
            -f, 3.0 * std::fabs(energy_per_area_closed(si_gap(1e-6))) / 1e-6) <= 1e-12);
  CHECK(force_per_area(si_gap(2e-6)) == doctest::Approx(f / 16.0).epsilon(1e-15));
  CHECK(force_per_area(natural_gap(1.0)) == doctest::Approx(-pi * pi / 240.0).epsilon(1e-15));
}

TEST_CASE("property: scaling laws and derivative consistency") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 500; ++i) {
    const double a = oracle::log_uniform(rng, 1e-9, 1e-4);
    for (double lambda : {2.0, 10.0}) {
      const double e_ratio = energy_per_area_closed(si_gap(lambda * a)) /
                             energy_per_area_closed(si_gap(a));
      const double f_ratio = force_per_area(si_gap(lambda * a)) / force_per_area(si_gap(a));
      CHECK(oracle::relative_error(e_ratio, std::pow(lambda, -3.0)) <= 1e-12);
      CHECK(oracle::relative_error(f_ratio, std::pow(lambda, -4.0)) <= 1e-12);
    }
    // Force is -dE/da with E the (negative) energy per area.
    const double h = 1e-4 * a;
    const double dE = (energy_per_area_closed(si_gap(a + h)) -
                       energy_per_area_closed(si_gap(a - h))) / (2.0 * h);
    CHECK(oracle::relative_error(force_per_area(si_gap(a)), -dE) <= 1e-6);
  }
}

TEST_CASE("convergence_report") {
  const auto gap = natural_gap(1.0);
  const std::array<std::uint64_t, 1> one{1};
  const auto r1 = convergence_report(gap, one, SignConvention::magnitude);
  REQUIRE(r1.size() == 1);
  CHECK(r1[0].series_value ==
        energy_per_area_series(gap, 1, SignConvention::magnitude).series_value);

  const std::array<std::uint64_t, 4> ns{1, 10, 100, 1000};
  const auto rows = convergence_report(si_gap(1e-6), ns);
  REQUIRE(rows.size() == 4);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(std::fabs(rows[i].closed_form_value - rows[i].series_value) <= rows[i].truncation_bound);
    if (i > 0) {
      CHECK(std::fabs(rows[i].series_value) > std::fabs(rows[i - 1].series_value));
      CHECK(rows[i - 1].truncation_bound / rows[i].truncation_bound == doctest::Approx(1000.0));
    }
  }

  const std::array<std::uint64_t, 2> bad{10, 5};
  CHECK(kind_of([&] { convergence_report(gap, bad); }) == ErrorKind::domain);
  CHECK(kind_of([&] { convergence_report(gap, std::span<const std::uint64_t>{}); }) ==
        ErrorKind::domain);
}
