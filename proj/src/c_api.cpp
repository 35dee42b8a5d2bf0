#include "casimir/casimir_kit.h"

#include <exception>
#include <new>
#include <string>
#include <vector>

#include "casimir/casimir.hpp"
#include "casimir/error.hpp"
#include "casimir/paradox.hpp"
#include "casimir/series.hpp"
#include "casimir/units.hpp"

#ifndef CASIMIR_KIT_VERSION
#define CASIMIR_KIT_VERSION "0.0.0"
#endif

struct ck_context {
  casimir::PhysicalConstants constants;
  std::string last_error;
};

namespace {

using namespace casimir;

ck_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return CK_ERR_PARSE;
    case ErrorKind::domain: return CK_ERR_DOMAIN;
    case ErrorKind::arity: return CK_ERR_ARITY;
    case ErrorKind::unsupported_argument: return CK_ERR_UNSUPPORTED;
    case ErrorKind::precondition: return CK_ERR_PRECONDITION;
    case ErrorKind::dimension: return CK_ERR_DIMENSION;
  }
  return CK_ERR_INTERNAL;
}

struct NullArgument {
  std::string name;
};

// Runs body, translating exceptions into a status and ctx->last_error.
template <typename Body>
ck_status guarded(ck_context* ctx, Body&& body) {
  if (ctx == nullptr) return CK_ERR_NULL_ARGUMENT;
  try {
    body();
    ctx->last_error.clear();
    return CK_OK;
  } catch (const Error& e) {
    ctx->last_error = e.what();
    return status_of(e.kind());
  } catch (const NullArgument& e) {
    ctx->last_error = e.name + " must not be null";
    return CK_ERR_NULL_ARGUMENT;
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
  } catch (...) {
    ctx->last_error = "unknown failure";
  }
  return CK_ERR_INTERNAL;
}

void require(const void* p, const char* name) {
  if (p == nullptr) throw NullArgument{name};
}

SignConvention sign_of(ck_sign_convention sign) {
  return sign == CK_SIGN_MAGNITUDE ? SignConvention::magnitude
                                   : SignConvention::attractive_negative;
}

ck_series_method method_of(SeriesMethod m) {
  switch (m) {
    case SeriesMethod::direct: return CK_METHOD_DIRECT;
    case SeriesMethod::euler_maclaurin: return CK_METHOD_EULER_MACLAURIN;
    case SeriesMethod::richardson: return CK_METHOD_RICHARDSON;
    case SeriesMethod::closed_form: return CK_METHOD_CLOSED_FORM;
    case SeriesMethod::cutoff_extrapolation: return CK_METHOD_CUTOFF_EXTRAPOLATION;
  }
  return CK_METHOD_DIRECT;
}

ck_series_estimate to_c(const SeriesEstimate& e) {
  return {e.estimate, e.error_bound, method_of(e.method), e.terms_used};
}

ck_scenario_result to_c(const ScenarioResult& r) {
  return {r.inside_pressure, r.outside_pressure, r.difference,
          r.classification == ScenarioClass::diverging_outside ? CK_DIVERGING_OUTSIDE
                                                               : CK_BALANCED_ZERO_OUTSIDE,
          r.classification == ScenarioClass::diverging_outside
              ? "P_o grows without bound as L_i -> 0 for any fixed P_i >= 0"
              : "P_i cancels the attraction exactly, so P_o = 0"};
}

PlateGap gap_of(const ck_context* ctx, double gap) { return PlateGap(gap, ctx->constants); }

}  // namespace

extern "C" {

const char* ck_version(void) { return CASIMIR_KIT_VERSION; }

const char* ck_status_string(ck_status status) {
  switch (status) {
    case CK_OK: return "ok";
    case CK_ERR_PARSE: return "parse error";
    case CK_ERR_DOMAIN: return "domain error";
    case CK_ERR_ARITY: return "arity error";
    case CK_ERR_UNSUPPORTED: return "unsupported argument";
    case CK_ERR_PRECONDITION: return "precondition error";
    case CK_ERR_DIMENSION: return "dimension error";
    case CK_ERR_NULL_ARGUMENT: return "null argument";
    case CK_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

ck_status ck_context_create(ck_unit_system units, ck_context** out) {
  if (out == nullptr) return CK_ERR_NULL_ARGUMENT;
  if (units != CK_UNITS_SI && units != CK_UNITS_NATURAL) return CK_ERR_DOMAIN;
  try {
    *out = new ck_context{units == CK_UNITS_SI ? codata_constants() : natural_units(), {}};
  } catch (...) {
    return CK_ERR_INTERNAL;
  }
  return CK_OK;
}

void ck_context_destroy(ck_context* ctx) { delete ctx; }

const char* ck_last_error(const ck_context* ctx) {
  return ctx == nullptr ? "null context" : ctx->last_error.c_str();
}

ck_status ck_constants(ck_context* ctx, double* hbar, double* c, ck_source_tag* source) {
  return guarded(ctx, [&] {
    require(hbar, "hbar");
    require(c, "c");
    *hbar = ctx->constants.hbar();
    *c = ctx->constants.c();
    if (source != nullptr) {
      switch (ctx->constants.source()) {
        case ConstantsSource::codata: *source = CK_SOURCE_CODATA; break;
        case ConstantsSource::natural: *source = CK_SOURCE_NATURAL; break;
        case ConstantsSource::custom: *source = CK_SOURCE_CUSTOM; break;
      }
    }
  });
}

ck_status ck_parse_length(ck_context* ctx, const char* text, double* meters) {
  return guarded(ctx, [&] {
    require(text, "text");
    require(meters, "meters");
    *meters = parse_length(text).in(dims::length);
  });
}

ck_status ck_parse_number(ck_context* ctx, const char* text, double* value) {
  return guarded(ctx, [&] {
    require(text, "text");
    require(value, "value");
    *value = parse_number(text);
  });
}

ck_status ck_partial_sum_inverse_powers(ck_context* ctx, double s, uint64_t terms,
                                        double* out) {
  return guarded(ctx, [&] {
    require(out, "out");
    *out = partial_sum_inverse_powers(s, terms);
  });
}

ck_status ck_tail_bound(ck_context* ctx, double s, uint64_t terms, double* lower,
                        double* upper) {
  return guarded(ctx, [&] {
    require(lower, "lower");
    require(upper, "upper");
    const auto b = tail_bound(s, terms);
    *lower = b.lower;
    *upper = b.upper;
  });
}

ck_status ck_zeta_even_closed_form(ck_context* ctx, int s, double* out) {
  return guarded(ctx, [&] {
    require(out, "out");
    *out = zeta_even_closed_form(s);
  });
}

ck_status ck_euler_maclaurin_sum(ck_context* ctx, double s, uint64_t terms, int order,
                                 ck_series_estimate* out) {
  return guarded(ctx, [&] {
    require(out, "out");
    *out = to_c(euler_maclaurin_sum(s, terms, order));
  });
}

ck_status ck_richardson_extrapolate(ck_context* ctx, const double* h, const double* values,
                                    size_t count, int power, double* out) {
  return guarded(ctx, [&] {
    require(out, "out");
    if (count > 0) {
      require(h, "h");
      require(values, "values");
    }
    std::vector<ExtrapolationRow> rows;
    rows.reserve(count);
    for (size_t i = 0; i < count; ++i) rows.push_back({h[i], values[i]});
    *out = richardson_extrapolate(rows, power);
  });
}

ck_status ck_exponential_cutoff_finite_part(ck_context* ctx, const double* epsilons,
                                            size_t count, double* regularized_out,
                                            ck_series_estimate* finite_part) {
  return guarded(ctx, [&] {
    require(finite_part, "finite_part");
    if (count > 0) {
      require(epsilons, "epsilons");
      require(regularized_out, "regularized_out");
    }
    const auto result =
        exponential_cutoff_finite_part(std::span<const double>(epsilons, count));
    for (size_t i = 0; i < count; ++i) {
      regularized_out[i] = result.trace.rows[i].regularized_value;
    }
    *finite_part = to_c(result.finite_part);
  });
}

ck_status ck_cutoff_direct_sum(ck_context* ctx, double epsilon, double* out) {
  return guarded(ctx, [&] {
    require(out, "out");
    *out = cutoff_direct_sum(epsilon);
  });
}

ck_status ck_check_gap(ck_context* ctx, double gap, int* implausible) {
  return guarded(ctx, [&] {
    require(implausible, "implausible");
    *implausible = gap_of(ctx, gap).plausibility() == GapPlausibility::implausible ? 1 : 0;
  });
}

ck_status ck_traversal_time(ck_context* ctx, double gap, double* out) {
  return guarded(ctx, [&] {
    require(out, "out");
    *out = traversal_time(gap_of(ctx, gap));
  });
}

ck_status ck_mode_state_at(ck_context* ctx, uint64_t n, double gap, ck_mode_state* out) {
  return guarded(ctx, [&] {
    require(out, "out");
    const auto m = mode_state(n, gap_of(ctx, gap));
    *out = {m.n, m.k_n, m.p_n, m.delta_x_xy, m.n_z, m.area_n, m.t};
  });
}

ck_status ck_per_state_energy_flux(ck_context* ctx, double gap, double* out) {
  return guarded(ctx, [&] {
    require(out, "out");
    *out = per_state_energy_flux(gap_of(ctx, gap));
  });
}

ck_status ck_energy_per_area_series(ck_context* ctx, double gap, uint64_t terms,
                                    ck_sign_convention sign, ck_energy_density* out) {
  return guarded(ctx, [&] {
    require(out, "out");
    const auto r = energy_per_area_series(gap_of(ctx, gap), terms, sign_of(sign));
    *out = {r.gap.a(),   r.series_value,     r.closed_form_value,
            r.terms_used, r.truncation_bound,
            r.sign_convention == SignConvention::magnitude ? CK_SIGN_MAGNITUDE
                                                           : CK_SIGN_ATTRACTIVE_NEGATIVE};
  });
}

ck_status ck_energy_per_area_closed(ck_context* ctx, double gap, ck_sign_convention sign,
                                    double* out) {
  return guarded(ctx, [&] {
    require(out, "out");
    *out = energy_per_area_closed(gap_of(ctx, gap), sign_of(sign));
  });
}

ck_status ck_force_per_area(ck_context* ctx, double gap, double* out) {
  return guarded(ctx, [&] {
    require(out, "out");
    *out = force_per_area(gap_of(ctx, gap));
  });
}

ck_status ck_convergence_report(ck_context* ctx, double gap, const uint64_t* terms,
                                size_t count, ck_sign_convention sign,
                                ck_convergence_row* rows_out) {
  return guarded(ctx, [&] {
    if (count > 0) {
      require(terms, "terms");
      require(rows_out, "rows_out");
    }
    const auto rows = convergence_report(
        gap_of(ctx, gap), std::span<const std::uint64_t>(terms, count), sign_of(sign));
    for (size_t i = 0; i < rows.size(); ++i) {
      rows_out[i] = {rows[i].terms, rows[i].series_value, rows[i].truncation_bound,
                     rows[i].closed_form_value};
    }
  });
}

ck_status ck_pressure_difference(ck_context* ctx, double inside_length, double* out) {
  return guarded(ctx, [&] {
    require(out, "out");
    *out = pressure_difference(ctx->constants, inside_length);
  });
}

ck_status ck_situation_one(ck_context* ctx, double inside_length, double inside_pressure,
                           ck_scenario_result* out) {
  return guarded(ctx, [&] {
    require(out, "out");
    *out = to_c(situation_one(ctx->constants, inside_length, inside_pressure));
  });
}

ck_status ck_situation_two(ck_context* ctx, double inside_length, ck_scenario_result* out) {
  return guarded(ctx, [&] {
    require(out, "out");
    *out = to_c(situation_two(ctx->constants, inside_length));
  });
}

ck_status ck_limit_sweep(ck_context* ctx, const double* inside_lengths, size_t count,
                         double fixed_inside_pressure, ck_limit_sweep_row* rows_out) {
  return guarded(ctx, [&] {
    if (count > 0) {
      require(inside_lengths, "inside_lengths");
      require(rows_out, "rows_out");
    }
    const auto rows = limit_sweep(ctx->constants,
                                  std::span<const double>(inside_lengths, count),
                                  fixed_inside_pressure);
    for (size_t i = 0; i < rows.size(); ++i) {
      rows_out[i] = {rows[i].inside_length, rows[i].situation_one_outside_pressure,
                     rows[i].situation_two_inside_pressure};
    }
  });
}

ck_status ck_cosmological_crossover(ck_context* ctx, double rho_vac, ck_crossover* out) {
  return guarded(ctx, [&] {
    require(out, "out");
    const auto r = cosmological_crossover(ctx->constants, rho_vac);
    *out = {r.closed_form, r.bisection, r.bisection_iterations};
  });
}

const char* ck_volumetric_density_definition(void) { return kVolumetricDensityDefinition; }

}  // extern "C"
