#include <random>
#include <string>

#include "casimir/error.hpp"
#include "casimir/units.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace casimir;

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

}  // namespace

TEST_CASE("codata constants") {
  const auto k = codata_constants();
  CHECK(k.hbar() == 1.054571817e-34);
  CHECK(k.c() == 299792458.0);
  CHECK(k.source() == ConstantsSource::codata);
}

TEST_CASE("natural units") {
  const auto k = natural_units();
  CHECK(k.hbar() == 1.0);
  CHECK(k.c() == 1.0);
  CHECK(k.source() == ConstantsSource::natural);
  const auto hc = hbar_of(k) * c_of(k);
  CHECK(hc.value() == 1.0);
  CHECK(hc.dimension() == dims::energy * dims::length);
}

TEST_CASE("custom constants reject non-positive values") {
  CHECK(PhysicalConstants::custom(2.0, 3.0).hbar() == 2.0);
  CHECK(kind_of([] { PhysicalConstants::custom(0.0, 1.0); }) == ErrorKind::domain);
  CHECK(kind_of([] { PhysicalConstants::custom(1.0, -1.0); }) == ErrorKind::domain);
}

TEST_CASE("dimension algebra") {
  const auto k = codata_constants();
  const auto a = meters(1e-6);
  const auto hc = hbar_of(k) * c_of(k);
  CHECK((hc / pow(a, 3)).dimension() == dims::energy_per_area);
  CHECK((hc / pow(a, 4)).dimension() == dims::pressure);
  CHECK((hc / pow(a, 4)).dimension() == dims::energy_density);
  CHECK((hbar_of(k) / a).dimension() == dims::momentum);
  CHECK((a / c_of(k)).dimension() == dims::time);
  CHECK(pow(a, -1).dimension() == dims::wavenumber);
  CHECK(to_string(dims::energy_per_area) == "energy_per_area");
  CHECK(to_string(Dimension{3, 0, 0}) == "L^3 M^0 T^0");

  SUBCASE("addition requires equal dimensions") {
    CHECK((a + meters(1e-6)).value() == doctest::Approx(2e-6));
    CHECK(kind_of([&] { (void)(a + (a * a)); }) == ErrorKind::dimension);
    CHECK(kind_of([&] { (void)(a - hbar_of(k)); }) == ErrorKind::dimension);
    CHECK(kind_of([&] { (void)a.in(dims::time); }) == ErrorKind::dimension);
  }
}

TEST_CASE("parse_length") {
  CHECK(parse_length("1um").value() == 1e-6);
  CHECK(parse_length("250nm").value() == doctest::Approx(2.5e-7).epsilon(1e-15));
  CHECK(parse_length("1e-6m").value() == 1e-6);
  CHECK(parse_length("1e-6 m").value() == 1e-6);
  CHECK(parse_length("  3 mm ").value() == 3e-3);
  CHECK(parse_length("+2pm").value() == 2e-12);
  CHECK(parse_length("0.5um").dimension() == dims::length);

  CHECK(kind_of([] { parse_length("-3um"); }) == ErrorKind::domain);
  CHECK(kind_of([] { parse_length("0nm"); }) == ErrorKind::domain);
  CHECK(kind_of([] { parse_length("1"); }) == ErrorKind::parse);
  CHECK(kind_of([] { parse_length("1km"); }) == ErrorKind::parse);
  CHECK(kind_of([] { parse_length("um"); }) == ErrorKind::parse);
  CHECK(kind_of([] { parse_length(""); }) == ErrorKind::parse);
  CHECK(kind_of([] { parse_length("1,5um"); }) == ErrorKind::parse);
  CHECK(kind_of([] { parse_length("nanum"); }) == ErrorKind::parse);

  try {
    parse_length("3parsec");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("parsec") != std::string::npos);
  }
}

TEST_CASE("parse_number") {
  CHECK(parse_number("5.26e-10") == 5.26e-10);
  CHECK(parse_number(" -1 ") == -1.0);
  CHECK(kind_of([] { parse_number("1um"); }) == ErrorKind::parse);
  CHECK(kind_of([] { parse_number("inf"); }) == ErrorKind::parse);
}

TEST_CASE("property: equivalent lengths agree across suffixes") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> mantissa(1, 999999);
  for (int i = 0; i < 2000; ++i) {
    const int m = mantissa(rng);
    // m pm == m/1000 nm == m/1e6 um, written exactly in decimal.
    const std::string pm = std::to_string(m) + "pm";
    const std::string nm = std::to_string(m / 1000) + "." +
                           std::string(3 - std::to_string(m % 1000).size(), '0') +
                           std::to_string(m % 1000) + "nm";
    const std::string sci = std::to_string(m) + "e-12m";
    const double a = parse_length(pm).value();
    CHECK(oracle::relative_error(parse_length(nm).value(), a) <= 1e-15);
    CHECK(oracle::relative_error(parse_length(sci).value(), a) <= 1e-15);
  }
}
