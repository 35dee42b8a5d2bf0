#include "casimir/series.hpp"

#include <array>
#include <cmath>
#include <string>

#include "casimir/compensated_sum.hpp"
#include "casimir/error.hpp"

namespace casimir {

const char* to_string(SeriesMethod method) noexcept {
  switch (method) {
    case SeriesMethod::direct: return "direct";
    case SeriesMethod::euler_maclaurin: return "euler_maclaurin";
    case SeriesMethod::richardson: return "richardson";
    case SeriesMethod::closed_form: return "closed_form";
    case SeriesMethod::cutoff_extrapolation: return "cutoff_extrapolation";
  }
  return "unknown";
}

namespace {

// B_2, B_4, ..., B_12.
constexpr std::array<long double, 6> kBernoulliEven{
    1.0L / 6.0L,  -1.0L / 30.0L, 1.0L / 42.0L,
    -1.0L / 30.0L, 5.0L / 66.0L,  -691.0L / 2730.0L,
};

constexpr long double kPiLong = 3.141592653589793238462643383279502884L;

void require_convergent(double s) {
  if (!(s > 1.0) || !std::isfinite(s)) {
    fail(ErrorKind::domain,
         "exponent must exceed 1 for a convergent series, got " + std::to_string(s));
  }
}

void require_terms(std::uint64_t terms) {
  if (terms == 0) fail(ErrorKind::domain, "number of terms must be at least 1");
}

double inverse_power(std::uint64_t n, double s) {
  return std::pow(static_cast<double>(n), -s);
}

// s (s+1) ... (s+m-1)
double rising_factorial(double s, int m) {
  double r = 1.0;
  for (int i = 0; i < m; ++i) r *= s + i;
  return r;
}

double factorial(int m) {
  double r = 1.0;
  for (int i = 2; i <= m; ++i) r *= i;
  return r;
}

// Correction number `index` (1-based) of the Euler-Maclaurin tail estimate.
double euler_maclaurin_correction(double s, double n, int index) {
  if (index == 1) return -0.5 * std::pow(n, -s);
  const int k = index - 1;  // uses B_{2k}
  const int m = 2 * k - 1;  // derivative order
  const double bernoulli = static_cast<double>(kBernoulliEven[static_cast<std::size_t>(k - 1)]);
  return bernoulli / factorial(2 * k) * rising_factorial(s, m) * std::pow(n, -s - m);
}

}  // namespace

double partial_sum_inverse_powers(double s, std::uint64_t terms) {
  require_convergent(s);
  require_terms(terms);
  CompensatedSum sum;
  for (std::uint64_t n = terms; n >= 1; --n) sum += inverse_power(n, s);
  return sum.value();
}

double partial_sum_inverse_powers_naive(double s, std::uint64_t terms) {
  require_convergent(s);
  require_terms(terms);
  double sum = 0.0;
  for (std::uint64_t n = 1; n <= terms; ++n) sum += inverse_power(n, s);
  return sum;
}

PartialSumTrace partial_sum_trace(double s, std::span<const std::uint64_t> terms) {
  require_convergent(s);
  if (terms.empty()) fail(ErrorKind::arity, "partial-sum trace needs at least one row");
  PartialSumTrace trace{s, {}};
  trace.rows.reserve(terms.size());
  std::uint64_t previous = 0;
  for (const auto n : terms) {
    require_terms(n);
    if (n <= previous) fail(ErrorKind::domain, "term counts must be strictly increasing");
    previous = n;
    trace.rows.push_back({n, partial_sum_inverse_powers(s, n)});
  }
  return trace;
}

TailBound tail_bound(double s, std::uint64_t terms) {
  require_convergent(s);
  require_terms(terms);
  const double n = static_cast<double>(terms);
  return {1.0 / ((s - 1.0) * std::pow(n + 1.0, s - 1.0)),
          1.0 / ((s - 1.0) * std::pow(n, s - 1.0))};
}

double zeta_even_closed_form(int s) {
  if (s < 2 || s > 12 || s % 2 != 0) {
    fail(ErrorKind::unsupported_argument,
         "unsupported argument s = " + std::to_string(s) +
             " (closed form covers even s in 2..12)");
  }
  const int k = s / 2;
  const long double bernoulli = kBernoulliEven[static_cast<std::size_t>(k - 1)];
  long double two_pi_power = 1.0L;
  long double fact = 1.0L;
  for (int i = 1; i <= s; ++i) {
    two_pi_power *= 2.0L * kPiLong;
    fact *= i;
  }
  const long double sign = (k % 2 == 1) ? 1.0L : -1.0L;
  return static_cast<double>(sign * bernoulli * two_pi_power / (2.0L * fact));
}

SeriesEstimate zeta_even_estimate(int s) {
  return {zeta_even_closed_form(s), 0.0, SeriesMethod::closed_form, 0};
}

SeriesEstimate euler_maclaurin_sum(double s, std::uint64_t terms, int order) {
  require_convergent(s);
  require_terms(terms);
  if (order < 0 || order > kMaxEulerMaclaurinOrder) {
    fail(ErrorKind::domain, "Euler-Maclaurin order must be in 0.." +
                                std::to_string(kMaxEulerMaclaurinOrder));
  }
  const double n = static_cast<double>(terms);
  CompensatedSum sum;
  for (std::uint64_t i = terms; i >= 1; --i) sum += inverse_power(i, s);
  sum += std::pow(n, 1.0 - s) / (s - 1.0);
  for (int index = 1; index <= order; ++index) sum += euler_maclaurin_correction(s, n, index);
  const double omitted = std::fabs(euler_maclaurin_correction(s, n, order + 1));
  return {sum.value(), omitted, SeriesMethod::euler_maclaurin, terms};
}

namespace {

void validate_extrapolation_rows(std::span<const ExtrapolationRow> rows, int power) {
  if (rows.size() < 2) fail(ErrorKind::arity, "extrapolation needs at least 2 rows");
  if (power < 1) fail(ErrorKind::domain, "error exponent must be a positive integer");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!(rows[i].h > 0.0) || !std::isfinite(rows[i].h)) {
      fail(ErrorKind::domain, "step sizes must be positive and finite");
    }
    if (i > 0 && !(rows[i].h < rows[i - 1].h)) {
      fail(ErrorKind::domain, "step sizes must be strictly decreasing");
    }
  }
}

}  // namespace

SeriesEstimate richardson_estimate(std::span<const ExtrapolationRow> rows, int power) {
  validate_extrapolation_rows(rows, power);
  // column[i] holds tableau entry T(i + j, j); each pass removes h^(power j).
  std::vector<double> column;
  column.reserve(rows.size());
  for (const auto& row : rows) column.push_back(row.value);
  double previous_level = column.back();
  for (std::size_t j = 1; j < rows.size(); ++j) {
    previous_level = column.back();
    std::vector<double> next;
    next.reserve(column.size() - 1);
    for (std::size_t i = j; i < rows.size(); ++i) {
      const double ratio = std::pow(rows[i - j].h / rows[i].h, static_cast<double>(power));
      const double fine = column[i - j + 1];
      const double coarse = column[i - j];
      next.push_back(fine + (fine - coarse) / (ratio - 1.0));
    }
    column = std::move(next);
  }
  const double estimate = column.back();
  return {estimate, std::fabs(estimate - previous_level), SeriesMethod::richardson,
          rows.size()};
}

double richardson_extrapolate(std::span<const ExtrapolationRow> rows, int power) {
  return richardson_estimate(rows, power).estimate;
}

double cutoff_regularized_value(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    fail(ErrorKind::domain, "cutoff must be positive");
  }
  const double one_minus = -std::expm1(-epsilon);
  const double g = std::exp(-epsilon) / (one_minus * one_minus);
  return g - 1.0 / (epsilon * epsilon);
}

double cutoff_direct_sum(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    fail(ErrorKind::domain, "cutoff must be positive");
  }
  const double peak = 1.0 / epsilon;
  CompensatedSum sum;
  for (std::uint64_t n = 1;; ++n) {
    const double x = static_cast<double>(n);
    const double term = x * std::exp(-x * epsilon);
    sum += term;
    if (x > peak && term < 1e-18 * sum.value()) break;
  }
  return sum.value();
}

CutoffResult exponential_cutoff_finite_part(std::span<const double> epsilons) {
  if (epsilons.empty()) fail(ErrorKind::arity, "cutoff grid is empty");
  CutoffResult result;
  result.trace.rows.reserve(epsilons.size());
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    const double eps = epsilons[i];
    if (!(eps > 0.0) || !std::isfinite(eps)) {
      fail(ErrorKind::domain, "cutoff must be positive, got " + std::to_string(eps));
    }
    if (eps > 0.5) {
      fail(ErrorKind::domain, "cutoff must not exceed 0.5, got " + std::to_string(eps));
    }
    if (i > 0 && !(eps < epsilons[i - 1])) {
      fail(ErrorKind::domain, "cutoffs must be strictly decreasing");
    }
    result.trace.rows.push_back({eps, cutoff_regularized_value(eps)});
  }

  if (result.trace.rows.size() == 1) {
    const auto& row = result.trace.rows.front();
    result.finite_part = {row.regularized_value, row.epsilon * row.epsilon / 200.0,
                          SeriesMethod::cutoff_extrapolation, 1};
    return result;
  }

  std::vector<ExtrapolationRow> rows;
  rows.reserve(result.trace.rows.size());
  for (const auto& row : result.trace.rows) rows.push_back({row.epsilon, row.regularized_value});
  result.finite_part = richardson_estimate(rows, 2);
  result.finite_part.method = SeriesMethod::cutoff_extrapolation;
  return result;
}

}  // namespace casimir
