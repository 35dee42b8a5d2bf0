#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace casimir {

enum class SeriesMethod {
  direct,
  euler_maclaurin,
  richardson,
  closed_form,
  cutoff_extrapolation,
};

const char* to_string(SeriesMethod method) noexcept;

/// A summation result. closed_form estimates carry error_bound == 0 and
/// terms_used == 0; every other method uses at least one term.
struct SeriesEstimate {
  double estimate = 0.0;
  double error_bound = 0.0;
  SeriesMethod method = SeriesMethod::direct;
  std::uint64_t terms_used = 0;
};

struct TailBound {
  double lower = 0.0;
  double upper = 0.0;
};

struct PartialSumRow {
  std::uint64_t terms = 0;
  double partial_sum = 0.0;
};

struct PartialSumTrace {
  double exponent = 0.0;
  std::vector<PartialSumRow> rows;
};

struct CutoffRow {
  double epsilon = 0.0;
  double regularized_value = 0.0;
};

/// Rows of g(eps) - 1/eps^2 with g(eps) = sum_n n exp(-n eps).
struct CutoffTrace {
  std::vector<CutoffRow> rows;
};

struct CutoffResult {
  CutoffTrace trace;
  SeriesEstimate finite_part;
};

struct ExtrapolationRow {
  double h = 0.0;
  double value = 0.0;
};

/// Sum of n^-s for n = 1..terms, accumulated from the smallest term upward
/// with compensation. Domain error for s <= 1 or terms == 0.
double partial_sum_inverse_powers(double s, std::uint64_t terms);

/// Same sum, naive left-to-right accumulation. Reference for comparisons only.
double partial_sum_inverse_powers_naive(double s, std::uint64_t terms);

PartialSumTrace partial_sum_trace(double s, std::span<const std::uint64_t> terms);

/// Integral-test bracket on zeta(s) - S_N:
/// [1/((s-1)(N+1)^(s-1)), 1/((s-1)N^(s-1))].
TailBound tail_bound(double s, std::uint64_t terms);

/// zeta(2k) from the Bernoulli table, for s in {2, 4, ..., 12}. The value is
/// formed in extended precision and rounded once.
double zeta_even_closed_form(int s);

SeriesEstimate zeta_even_estimate(int s);

inline constexpr int kMaxEulerMaclaurinOrder = 4;

/// S_N + N^(1-s)/(s-1) plus the Euler-Maclaurin corrections
///   order 1: -N^-s / 2
///   order 2: + s N^(-s-1) / 12
///   order 3: - s(s+1)(s+2) N^(-s-3) / 720
///   order 4: + s(s+1)(s+2)(s+3)(s+4) N^(-s-5) / 30240
/// error_bound is the magnitude of the first omitted correction.
SeriesEstimate euler_maclaurin_sum(double s, std::uint64_t terms, int order);

/// Repeated Richardson elimination of h^power, h^(2 power), ... over rows with
/// strictly decreasing h. Needs at least two rows.
double richardson_extrapolate(std::span<const ExtrapolationRow> rows, int power);

/// Same tableau, also reporting the spread between the last two diagonal
/// entries as an error estimate.
SeriesEstimate richardson_estimate(std::span<const ExtrapolationRow> rows, int power);

/// g(eps) - 1/eps^2 from the closed form g = e^-eps / (1 - e^-eps)^2.
double cutoff_regularized_value(double epsilon);

/// g(eps) by direct summation, stopped once the next term falls below 1e-18
/// of the running sum. Independent cross-check of the closed form.
double cutoff_direct_sum(double epsilon);

/// Builds the cutoff trace for strictly decreasing eps in (0, 0.5] and
/// extrapolates eps -> 0 with Richardson in powers of eps^2. A single eps is
/// reported as-is with the bound eps^2/200 from the expansion
/// -1/12 + eps^2/240 - ...
CutoffResult exponential_cutoff_finite_part(std::span<const double> epsilons);

}  // namespace casimir
