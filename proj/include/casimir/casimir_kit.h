/* C interface to the casimir_kit shared library.
 *
 * All calls go through an opaque ck_context that fixes the unit system and
 * keeps the message of the last failure. Functions return a ck_status and
 * write results through out-pointers; nothing is written on failure. A context
 * may be used by one thread at a time; separate contexts are independent.
 */
#ifndef CASIMIR_KIT_H
#define CASIMIR_KIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(CASIMIR_KIT_BUILDING)
#    define CK_API __declspec(dllexport)
#  else
#    define CK_API __declspec(dllimport)
#  endif
#else
#  define CK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ck_status {
  CK_OK = 0,
  CK_ERR_PARSE = 1,
  CK_ERR_DOMAIN = 2,
  CK_ERR_ARITY = 3,
  CK_ERR_UNSUPPORTED = 4,
  CK_ERR_PRECONDITION = 5,
  CK_ERR_DIMENSION = 6,
  CK_ERR_NULL_ARGUMENT = 7,
  CK_ERR_INTERNAL = 8
} ck_status;

typedef enum ck_unit_system { CK_UNITS_SI = 0, CK_UNITS_NATURAL = 1 } ck_unit_system;

typedef enum ck_source_tag {
  CK_SOURCE_CODATA = 0,
  CK_SOURCE_NATURAL = 1,
  CK_SOURCE_CUSTOM = 2
} ck_source_tag;

typedef enum ck_sign_convention {
  CK_SIGN_MAGNITUDE = 0,
  CK_SIGN_ATTRACTIVE_NEGATIVE = 1
} ck_sign_convention;

typedef enum ck_series_method {
  CK_METHOD_DIRECT = 0,
  CK_METHOD_EULER_MACLAURIN = 1,
  CK_METHOD_RICHARDSON = 2,
  CK_METHOD_CLOSED_FORM = 3,
  CK_METHOD_CUTOFF_EXTRAPOLATION = 4
} ck_series_method;

typedef enum ck_scenario_class {
  CK_DIVERGING_OUTSIDE = 0,
  CK_BALANCED_ZERO_OUTSIDE = 1
} ck_scenario_class;

typedef struct ck_context ck_context;

typedef struct ck_series_estimate {
  double estimate;
  double error_bound;
  ck_series_method method;
  uint64_t terms_used;
} ck_series_estimate;

typedef struct ck_mode_state {
  uint64_t n;
  double k_n;
  double p_n;
  double delta_x_xy;
  double n_z;
  double area_n;
  double t;
} ck_mode_state;

typedef struct ck_energy_density {
  double gap;
  double series_value;
  double closed_form_value;
  uint64_t terms_used;
  double truncation_bound;
  ck_sign_convention sign_convention;
} ck_energy_density;

typedef struct ck_convergence_row {
  uint64_t terms;
  double series_value;
  double truncation_bound;
  double closed_form_value;
} ck_convergence_row;

typedef struct ck_scenario_result {
  double inside_pressure;
  double outside_pressure;
  double difference;
  ck_scenario_class classification;
  const char* note; /* static storage */
} ck_scenario_result;

typedef struct ck_limit_sweep_row {
  double inside_length;
  double situation_one_outside_pressure;
  double situation_two_inside_pressure;
} ck_limit_sweep_row;

typedef struct ck_crossover {
  double closed_form;
  double bisection;
  int bisection_iterations;
} ck_crossover;

CK_API const char* ck_version(void);
CK_API const char* ck_status_string(ck_status status);

/* Context lifetime */
CK_API ck_status ck_context_create(ck_unit_system units, ck_context** out);
CK_API void ck_context_destroy(ck_context* ctx);
/* Message of the most recent failure on ctx, "" when none. Owned by ctx. */
CK_API const char* ck_last_error(const ck_context* ctx);
CK_API ck_status ck_constants(ck_context* ctx, double* hbar, double* c, ck_source_tag* source);

/* Input parsing */
CK_API ck_status ck_parse_length(ck_context* ctx, const char* text, double* meters);
CK_API ck_status ck_parse_number(ck_context* ctx, const char* text, double* value);

/* Series machinery */
CK_API ck_status ck_partial_sum_inverse_powers(ck_context* ctx, double s, uint64_t terms,
                                               double* out);
CK_API ck_status ck_tail_bound(ck_context* ctx, double s, uint64_t terms, double* lower,
                               double* upper);
CK_API ck_status ck_zeta_even_closed_form(ck_context* ctx, int s, double* out);
CK_API ck_status ck_euler_maclaurin_sum(ck_context* ctx, double s, uint64_t terms, int order,
                                        ck_series_estimate* out);
CK_API ck_status ck_richardson_extrapolate(ck_context* ctx, const double* h,
                                           const double* values, size_t count, int power,
                                           double* out);
/* regularized_out must hold count doubles. */
CK_API ck_status ck_exponential_cutoff_finite_part(ck_context* ctx, const double* epsilons,
                                                   size_t count, double* regularized_out,
                                                   ck_series_estimate* finite_part);
CK_API ck_status ck_cutoff_direct_sum(ck_context* ctx, double epsilon, double* out);

/* Parallel-plate derivation; gap in meters (or natural length units) */
/* *implausible is set to 1 for SI gaps outside [1e-9, 1e-3] m. */
CK_API ck_status ck_check_gap(ck_context* ctx, double gap, int* implausible);
CK_API ck_status ck_traversal_time(ck_context* ctx, double gap, double* out);
CK_API ck_status ck_mode_state_at(ck_context* ctx, uint64_t n, double gap, ck_mode_state* out);
CK_API ck_status ck_per_state_energy_flux(ck_context* ctx, double gap, double* out);
CK_API ck_status ck_energy_per_area_series(ck_context* ctx, double gap, uint64_t terms,
                                           ck_sign_convention sign, ck_energy_density* out);
CK_API ck_status ck_energy_per_area_closed(ck_context* ctx, double gap,
                                           ck_sign_convention sign, double* out);
CK_API ck_status ck_force_per_area(ck_context* ctx, double gap, double* out);
/* rows_out must hold count rows. */
CK_API ck_status ck_convergence_report(ck_context* ctx, double gap, const uint64_t* terms,
                                       size_t count, ck_sign_convention sign,
                                       ck_convergence_row* rows_out);

/* Pressure scenarios */
CK_API ck_status ck_pressure_difference(ck_context* ctx, double inside_length, double* out);
CK_API ck_status ck_situation_one(ck_context* ctx, double inside_length,
                                  double inside_pressure, ck_scenario_result* out);
CK_API ck_status ck_situation_two(ck_context* ctx, double inside_length,
                                  ck_scenario_result* out);
/* rows_out must hold count rows. */
CK_API ck_status ck_limit_sweep(ck_context* ctx, const double* inside_lengths, size_t count,
                                double fixed_inside_pressure, ck_limit_sweep_row* rows_out);
CK_API ck_status ck_cosmological_crossover(ck_context* ctx, double rho_vac,
                                           ck_crossover* out);
CK_API const char* ck_volumetric_density_definition(void);

#ifdef __cplusplus
}
#endif

#endif /* CASIMIR_KIT_H */
