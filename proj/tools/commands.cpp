#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli_io.hpp"

namespace casimir::cli {

namespace {

/// Failure reported by the C library.
class ApiError : public std::runtime_error {
 public:
  ApiError(ck_status status, const std::string& message)
      : std::runtime_error(message), status_(status) {}
  ck_status status() const noexcept { return status_; }

 private:
  ck_status status_;
};

struct ContextDeleter {
  void operator()(ck_context* ctx) const noexcept { ck_context_destroy(ctx); }
};
using ContextPtr = std::unique_ptr<ck_context, ContextDeleter>;

class Session {
 public:
  explicit Session(ck_unit_system units) {
    ck_context* raw = nullptr;
    if (ck_context_create(units, &raw) != CK_OK) {
      throw ApiError(CK_ERR_INTERNAL, "cannot create library context");
    }
    ctx_.reset(raw);
  }

  ck_context* get() const noexcept { return ctx_.get(); }

  /// Throws ApiError carrying the library message; `what` prefixes it.
  void check(ck_status status, const std::string& what = {}) const {
    if (status == CK_OK) return;
    std::string message = ck_last_error(ctx_.get());
    if (message.empty()) message = ck_status_string(status);
    throw ApiError(status, what.empty() ? message : what + ": " + message);
  }

 private:
  ContextPtr ctx_;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::string current;
  for (const char ch : text) {
    if (ch == ',') {
      items.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  items.push_back(current);
  return items;
}

struct LengthInput {
  std::string text;
  double value = 0.0;
};

// SI lengths need a unit suffix; natural-unit lengths are plain numbers.
LengthInput parse_length_arg(const Session& s, ck_unit_system units, const std::string& text,
                             const std::string& name) {
  LengthInput in{text, 0.0};
  const ck_status status = units == CK_UNITS_SI
                               ? ck_parse_length(s.get(), text.c_str(), &in.value)
                               : ck_parse_number(s.get(), text.c_str(), &in.value);
  if (status == CK_ERR_DOMAIN || (status == CK_OK && !(in.value > 0.0))) {
    throw InputError(name + " must be positive (got '" + text + "')");
  }
  s.check(status, name);
  return in;
}

double parse_number_arg(const Session& s, const std::string& text, const std::string& name) {
  double value = 0.0;
  s.check(ck_parse_number(s.get(), text.c_str(), &value), name);
  return value;
}

// Validates the gap against the library and warns for implausible SI values.
void check_gap(const Session& s, const LengthInput& gap, const std::string& name,
               std::ostream& err) {
  int implausible = 0;
  const ck_status status = ck_check_gap(s.get(), gap.value, &implausible);
  if (status == CK_ERR_DOMAIN) {
    throw InputError(name + " out of range: " + std::string(ck_last_error(s.get())));
  }
  s.check(status, name);
  if (implausible != 0) {
    err << "casimir-kit: warning: " << name << " '" << gap.text
        << "' is outside the ideal-plate range [1e-9, 1e-3] m\n";
  }
}

Json length_json(const LengthInput& in) { return Json{{"text", in.text}, {"value", in.value}}; }

ck_sign_convention parse_sign(const std::string& text) {
  if (text == "negative" || text == "attractive_negative") return CK_SIGN_ATTRACTIVE_NEGATIVE;
  if (text == "magnitude") return CK_SIGN_MAGNITUDE;
  throw InputError("unknown sign convention '" + text + "' (use negative or magnitude)");
}

const char* sign_name(ck_sign_convention sign) {
  return sign == CK_SIGN_MAGNITUDE ? "magnitude" : "attractive_negative";
}

const char* method_name(ck_series_method method) {
  switch (method) {
    case CK_METHOD_DIRECT: return "direct";
    case CK_METHOD_EULER_MACLAURIN: return "euler_maclaurin";
    case CK_METHOD_RICHARDSON: return "richardson";
    case CK_METHOD_CLOSED_FORM: return "closed_form";
    case CK_METHOD_CUTOFF_EXTRAPOLATION: return "cutoff_extrapolation";
  }
  return "unknown";
}

Json metadata(const Session& s, const RunConfig& config, ck_sign_convention sign) {
  double hbar = 0.0;
  double c = 0.0;
  ck_source_tag source = CK_SOURCE_CODATA;
  s.check(ck_constants(s.get(), &hbar, &c, &source));
  return Json{
      {"constants_source", source == CK_SOURCE_CODATA    ? "codata2018"
                           : source == CK_SOURCE_NATURAL ? "natural"
                                                         : "custom"},
      {"hbar", hbar},
      {"c", c},
      {"unit_system", units_name(config.units)},
      {"sign_convention", sign_name(sign)},
      {"volumetric_density_definition", ck_volumetric_density_definition()},
      {"tool_version", ck_version()},
  };
}

std::uint64_t parse_count(const std::string& text, const std::string& name) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw InputError("invalid " + name + " '" + text + "'");
  }
  return value;
}

// Flags consumed by the subcommands below; values that look like negative
// numbers are glued to their flag so the option parser keeps them as values.
const std::set<std::string> kValueFlags{
    "--gap", "--N",    "--sign", "--n-max", "--Ns",    "--s",     "--order",
    "--eps", "--Li",   "--Pi",   "--grid",  "--rho",   "--from",  "--to",
    "--count", "--scale", "--quantity", "--situation", "--units", "--precision",
    "--format", "--config"};

std::vector<std::string> normalize_args(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (kValueFlags.count(arg) != 0 && i + 1 < argc) {
      const std::string next = argv[i + 1];
      if (next.size() >= 2 && next[0] == '-' &&
          (std::isdigit(static_cast<unsigned char>(next[1])) || next[1] == '.')) {
        args.push_back(arg + "=" + next);
        ++i;
        continue;
      }
    }
    args.push_back(std::move(arg));
  }
  return args;
}

struct Options {
  std::optional<std::string> units, format, config_path;
  std::optional<int> precision;

  std::string gap, sign = "negative";
  std::optional<std::uint64_t> terms;
  std::uint64_t n_max = 10;
  std::string ns = "1,10,100,1000";
  int s = 0;
  int order = 2;
  std::string eps = "0.2,0.1,0.05,0.025";
  bool cross_check = false;
  std::string li, grid, situation, pi;
  std::string rho;
  std::string quantity = "force", from, to, scale = "log";
  std::uint64_t count = 10;
};

RunConfig resolve_config(const Options& o) {
  RunConfig config;
  if (o.config_path) {
    config = load_config_file(*o.config_path, config);
  } else if (const char* env = std::getenv("CASIMIR_KIT_CONFIG"); env != nullptr && *env) {
    config = load_config_file(env, config);
  }
  if (o.units) config.units = parse_units(*o.units);
  if (o.format) config.format = parse_format(*o.format);
  if (o.precision) config.precision = *o.precision;
  config.validate();
  return config;
}

OutputEnvelope cmd_energy(const Session& s, const Options& o, const RunConfig& config,
                          std::ostream& err) {
  const auto gap = parse_length_arg(s, config.units, o.gap, "gap");
  check_gap(s, gap, "gap", err);
  const auto sign = parse_sign(o.sign);
  const std::uint64_t n = o.terms.value_or(config.default_n);
  ck_energy_density r{};
  s.check(ck_energy_per_area_series(s.get(), gap.value, n, sign, &r));
  OutputEnvelope e;
  e.command = "energy";
  e.inputs = {{"gap", length_json(gap)}, {"N", n}, {"sign", o.sign}};
  e.results = {{"series_value", r.series_value},
               {"closed_form_value", r.closed_form_value},
               {"truncation_bound", r.truncation_bound},
               {"terms_used", r.terms_used}};
  e.metadata = metadata(s, config, sign);
  return e;
}

OutputEnvelope cmd_force(const Session& s, const Options& o, const RunConfig& config,
                         std::ostream& err) {
  const auto gap = parse_length_arg(s, config.units, o.gap, "gap");
  check_gap(s, gap, "gap", err);
  double force = 0.0;
  s.check(ck_force_per_area(s.get(), gap.value, &force));
  OutputEnvelope e;
  e.command = "force";
  e.inputs = {{"gap", length_json(gap)}};
  e.results = {{"force_per_area", force}};
  e.metadata = metadata(s, config, CK_SIGN_ATTRACTIVE_NEGATIVE);
  return e;
}

OutputEnvelope cmd_modes(const Session& s, const Options& o, const RunConfig& config,
                         std::ostream& err) {
  const auto gap = parse_length_arg(s, config.units, o.gap, "gap");
  check_gap(s, gap, "gap", err);
  if (o.n_max < 1) throw InputError("n-max must be at least 1");
  double t = 0.0;
  double flux = 0.0;
  s.check(ck_traversal_time(s.get(), gap.value, &t));
  s.check(ck_per_state_energy_flux(s.get(), gap.value, &flux));
  Json rows = Json::array();
  for (std::uint64_t n = 1; n <= o.n_max; ++n) {
    ck_mode_state m{};
    s.check(ck_mode_state_at(s.get(), n, gap.value, &m));
    rows.push_back({{"n", m.n},
                    {"k_n", m.k_n},
                    {"p_n", m.p_n},
                    {"delta_x_xy", m.delta_x_xy},
                    {"n_z", m.n_z},
                    {"area_n", m.area_n}});
  }
  OutputEnvelope e;
  e.command = "modes";
  e.inputs = {{"gap", length_json(gap)}, {"n_max", o.n_max}};
  e.results = {{"traversal_time", t}, {"per_state_energy_flux", flux}, {"rows", rows}};
  e.metadata = metadata(s, config, CK_SIGN_ATTRACTIVE_NEGATIVE);
  return e;
}

OutputEnvelope cmd_converge(const Session& s, const Options& o, const RunConfig& config,
                            std::ostream& err) {
  const auto gap = parse_length_arg(s, config.units, o.gap, "gap");
  check_gap(s, gap, "gap", err);
  const auto sign = parse_sign(o.sign);
  std::vector<std::uint64_t> ns;
  for (const auto& item : split_list(o.ns)) ns.push_back(parse_count(item, "N"));
  std::vector<ck_convergence_row> rows(ns.size());
  s.check(ck_convergence_report(s.get(), gap.value, ns.data(), ns.size(), sign, rows.data()),
          "Ns");
  Json table = Json::array();
  for (const auto& r : rows) {
    table.push_back({{"terms_used", r.terms},
                     {"series_value", r.series_value},
                     {"truncation_bound", r.truncation_bound},
                     {"closed_form_value", r.closed_form_value}});
  }
  OutputEnvelope e;
  e.command = "converge";
  e.inputs = {{"gap", length_json(gap)}, {"Ns", ns}, {"sign", o.sign}};
  e.results = {{"rows", table}};
  e.metadata = metadata(s, config, sign);
  return e;
}

OutputEnvelope cmd_zeta(const Session& s, const Options& o, const RunConfig& config) {
  const std::uint64_t n = o.terms.value_or(config.default_n);
  double closed = 0.0;
  s.check(ck_zeta_even_closed_form(s.get(), o.s, &closed));
  double partial = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  ck_series_estimate em{};
  s.check(ck_partial_sum_inverse_powers(s.get(), o.s, n, &partial));
  s.check(ck_tail_bound(s.get(), o.s, n, &lower, &upper));
  s.check(ck_euler_maclaurin_sum(s.get(), o.s, n, o.order, &em), "order");
  OutputEnvelope e;
  e.command = "zeta";
  e.inputs = {{"s", o.s}, {"N", n}, {"order", o.order}};
  e.results = {{"closed_form", closed},
               {"partial_sum", partial},
               {"terms_used", n},
               {"tail_lower", lower},
               {"tail_upper", upper},
               {"bracket_lower", partial + lower},
               {"bracket_upper", partial + upper},
               {"euler_maclaurin_order", o.order},
               {"euler_maclaurin_estimate", em.estimate},
               {"euler_maclaurin_error_bound", em.error_bound}};
  e.metadata = metadata(s, config, CK_SIGN_ATTRACTIVE_NEGATIVE);
  return e;
}

OutputEnvelope cmd_cutoff(const Session& s, const Options& o, const RunConfig& config) {
  std::vector<double> eps;
  for (const auto& item : split_list(o.eps)) eps.push_back(parse_number_arg(s, item, "eps"));
  std::vector<double> regularized(eps.size());
  ck_series_estimate finite{};
  s.check(ck_exponential_cutoff_finite_part(s.get(), eps.data(), eps.size(), regularized.data(),
                                            &finite),
          "eps");
  Json rows = Json::array();
  for (std::size_t i = 0; i < eps.size(); ++i) {
    Json row = {{"epsilon", eps[i]}, {"regularized_value", regularized[i]}};
    if (o.cross_check) {
      double direct = 0.0;
      s.check(ck_cutoff_direct_sum(s.get(), eps[i], &direct));
      row["direct_sum_regularized_value"] = direct - 1.0 / (eps[i] * eps[i]);
    }
    rows.push_back(row);
  }
  OutputEnvelope e;
  e.command = "cutoff";
  e.inputs = {{"eps", eps}};
  e.results = {{"finite_part", finite.estimate},
               {"error_bound", finite.error_bound},
               {"method", method_name(finite.method)},
               {"extrapolated", eps.size() > 1},
               {"target", -1.0 / 12.0},
               {"rows", rows}};
  e.metadata = metadata(s, config, CK_SIGN_ATTRACTIVE_NEGATIVE);
  return e;
}

const char* classification_name(ck_scenario_class c) {
  return c == CK_DIVERGING_OUTSIDE ? "diverging_outside" : "balanced_zero_outside";
}

OutputEnvelope cmd_paradox(const Session& s, const Options& o, const RunConfig& config) {
  OutputEnvelope e;
  e.command = "paradox";
  e.metadata = metadata(s, config, CK_SIGN_ATTRACTIVE_NEGATIVE);

  if (!o.grid.empty()) {
    if (!o.li.empty()) throw InputError("use either --Li or --grid, not both");
    std::vector<LengthInput> grid;
    std::vector<double> lengths;
    for (const auto& item : split_list(o.grid)) {
      grid.push_back(parse_length_arg(s, config.units, item, "Li"));
      lengths.push_back(grid.back().value);
    }
    const double fixed = o.pi.empty() ? 0.0 : parse_number_arg(s, o.pi, "Pi");
    std::vector<ck_limit_sweep_row> rows(lengths.size());
    s.check(ck_limit_sweep(s.get(), lengths.data(), lengths.size(), fixed, rows.data()), "grid");
    Json table = Json::array();
    for (const auto& r : rows) {
      table.push_back({{"inside_length", r.inside_length},
                       {"situation_one_outside_pressure", r.situation_one_outside_pressure},
                       {"situation_two_inside_pressure", r.situation_two_inside_pressure}});
    }
    Json grid_json = Json::array();
    for (const auto& g : grid) grid_json.push_back(length_json(g));
    e.inputs = {{"grid", grid_json}, {"Pi", fixed}, {"outside_length", "infinity"}};
    e.results = {{"rows", table}};
    return e;
  }

  if (o.li.empty()) throw InputError("paradox needs --Li or --grid");
  const auto li = parse_length_arg(s, config.units, o.li, "Li");
  ck_scenario_result r{};
  if (o.situation == "one") {
    const double pi = o.pi.empty() ? 0.0 : parse_number_arg(s, o.pi, "Pi");
    s.check(ck_situation_one(s.get(), li.value, pi, &r), "Pi");
    e.inputs = {{"Li", length_json(li)}, {"situation", "one"}, {"Pi", pi}};
  } else if (o.situation == "two") {
    if (!o.pi.empty()) throw InputError("Pi is determined by the gap in situation two");
    s.check(ck_situation_two(s.get(), li.value, &r));
    e.inputs = {{"Li", length_json(li)}, {"situation", "two"}};
  } else {
    throw InputError("situation must be 'one' or 'two'");
  }
  e.inputs["outside_length"] = "infinity";
  e.results = {{"inside_pressure", r.inside_pressure},
               {"outside_pressure", r.outside_pressure},
               {"difference", r.difference},
               {"outside_length", "infinity"},
               {"classification", classification_name(r.classification)},
               {"note", r.note}};
  return e;
}

OutputEnvelope cmd_crossover(const Session& s, const Options& o, const RunConfig& config) {
  const double rho = parse_number_arg(s, o.rho, "rho");
  ck_crossover r{};
  s.check(ck_cosmological_crossover(s.get(), rho, &r), "rho");
  OutputEnvelope e;
  e.command = "crossover";
  e.inputs = {{"rho", {{"text", o.rho}, {"value", rho}}}};
  e.results = {{"crossover_gap", r.closed_form},
               {"bisection_gap", r.bisection},
               {"relative_difference", std::fabs(r.bisection - r.closed_form) / r.closed_form},
               {"bisection_iterations", r.bisection_iterations}};
  e.metadata = metadata(s, config, CK_SIGN_ATTRACTIVE_NEGATIVE);
  return e;
}

OutputEnvelope cmd_sweep(const Session& s, const Options& o, const RunConfig& config,
                         std::ostream& err) {
  if (o.quantity != "energy" && o.quantity != "force") {
    throw InputError("quantity must be 'energy' or 'force'");
  }
  if (o.scale != "log" && o.scale != "linear") throw InputError("scale must be 'log' or 'linear'");
  if (o.count < 1) throw InputError("count must be at least 1");
  const auto from = parse_length_arg(s, config.units, o.from, "from");
  const auto to = parse_length_arg(s, config.units, o.to, "to");
  if (o.count > 1 && !(from.value < to.value)) {
    throw InputError("sweep range must be increasing (from < to)");
  }
  if (o.count == 1 && from.value > to.value) {
    throw InputError("sweep range must be increasing (from <= to)");
  }
  check_gap(s, from, "from", err);
  check_gap(s, to, "to", err);
  const auto sign = parse_sign(o.sign);
  const bool energy = o.quantity == "energy";
  const char* column = energy ? "energy_per_area" : "force_per_area";

  Json rows = Json::array();
  for (std::uint64_t i = 0; i < o.count; ++i) {
    double gap = from.value;
    if (o.count > 1) {
      const double f = static_cast<double>(i) / static_cast<double>(o.count - 1);
      gap = o.scale == "log"
                ? std::exp(std::log(from.value) + f * (std::log(to.value) - std::log(from.value)))
                : from.value + f * (to.value - from.value);
      if (i == 0) gap = from.value;
      if (i + 1 == o.count) gap = to.value;
    }
    double value = 0.0;
    if (energy) {
      s.check(ck_energy_per_area_closed(s.get(), gap, sign, &value));
    } else {
      s.check(ck_force_per_area(s.get(), gap, &value));
    }
    rows.push_back({{"gap", gap}, {column, value}});
  }
  OutputEnvelope e;
  e.command = "sweep";
  e.inputs = {{"quantity", o.quantity}, {"from", length_json(from)}, {"to", length_json(to)},
              {"count", o.count},       {"scale", o.scale}};
  e.results = {{"rows", rows}};
  e.metadata = metadata(s, config, energy ? sign : CK_SIGN_ATTRACTIVE_NEGATIVE);
  return e;
}

bool is_input_status(ck_status status) {
  return status != CK_ERR_INTERNAL && status != CK_ERR_NULL_ARGUMENT;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Casimir vacuum energy calculator", "casimir-kit"};
  app.require_subcommand(1);
  app.add_option("--units", o.units, "Unit system: si or natural");
  app.add_option("--precision", o.precision, "Significant digits in text/CSV output (4-17)");
  app.add_option("--format", o.format, "Output format: json, csv or text");
  app.add_option("--config", o.config_path, "Key = value configuration file");

  auto* energy = app.add_subcommand("energy", "Energy per plate area at a gap");
  energy->add_option("--gap", o.gap, "Plate separation, e.g. 1um")->required();
  energy->add_option("--N", o.terms, "Number of series terms");
  energy->add_option("--sign", o.sign, "negative or magnitude");

  auto* force = app.add_subcommand("force", "Attractive pressure at a gap");
  force->add_option("--gap", o.gap, "Plate separation")->required();

  auto* modes = app.add_subcommand("modes", "Per-mode quantities n = 1..n-max");
  modes->add_option("--gap", o.gap, "Plate separation")->required();
  modes->add_option("--n-max", o.n_max, "Highest mode index");

  auto* converge = app.add_subcommand("converge", "Series convergence table");
  converge->add_option("--gap", o.gap, "Plate separation")->required();
  converge->add_option("--Ns", o.ns, "Comma-separated, strictly increasing term counts");
  converge->add_option("--sign", o.sign, "negative or magnitude");

  auto* zeta = app.add_subcommand("zeta", "zeta(s) by closed form, partial sums and Euler-Maclaurin");
  zeta->add_option("--s", o.s, "Even argument 2..12")->required();
  zeta->add_option("--N", o.terms, "Number of terms");
  zeta->add_option("--order", o.order, "Euler-Maclaurin correction order");

  auto* cutoff = app.add_subcommand("cutoff", "Exponential-cutoff finite part of sum n");
  cutoff->add_option("--eps", o.eps, "Comma-separated, strictly decreasing cutoffs");
  cutoff->add_flag("--cross-check", o.cross_check, "Add the direct-sum column");

  auto* paradox = app.add_subcommand("paradox", "Inside/outside pressure scenarios");
  paradox->add_option("--Li", o.li, "Gap between the plates");
  paradox->add_option("--grid", o.grid, "Comma-separated decreasing gaps for a limit sweep");
  paradox->add_option("--situation", o.situation, "one or two")->default_val("one");
  paradox->add_option("--Pi", o.pi, "Inside pressure for situation one (>= 0)");

  auto* crossover = app.add_subcommand("crossover", "Gap where the plate energy density equals rho");
  crossover->add_option("--rho", o.rho, "Vacuum energy density")->required();

  auto* sweep = app.add_subcommand("sweep", "Energy or force over a range of gaps");
  sweep->add_option("--quantity", o.quantity, "energy or force");
  sweep->add_option("--from", o.from, "Smallest gap")->required();
  sweep->add_option("--to", o.to, "Largest gap")->required();
  sweep->add_option("--count", o.count, "Number of points");
  sweep->add_option("--scale", o.scale, "log or linear");
  sweep->add_option("--sign", o.sign, "negative or magnitude (energy only)");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    auto args = normalize_args(argc, argv);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "casimir-kit: error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    const RunConfig config = resolve_config(o);
    Session session(config.units);
    OutputEnvelope envelope;
    if (energy->parsed()) {
      envelope = cmd_energy(session, o, config, err);
    } else if (force->parsed()) {
      envelope = cmd_force(session, o, config, err);
    } else if (modes->parsed()) {
      envelope = cmd_modes(session, o, config, err);
    } else if (converge->parsed()) {
      envelope = cmd_converge(session, o, config, err);
    } else if (zeta->parsed()) {
      envelope = cmd_zeta(session, o, config);
    } else if (cutoff->parsed()) {
      envelope = cmd_cutoff(session, o, config);
    } else if (paradox->parsed()) {
      envelope = cmd_paradox(session, o, config);
    } else if (crossover->parsed()) {
      envelope = cmd_crossover(session, o, config);
    } else {
      envelope = cmd_sweep(session, o, config, err);
    }
    out << render(envelope, config);
    return kExitOk;
  } catch (const InputError& e) {
    err << "casimir-kit: error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ApiError& e) {
    err << "casimir-kit: error: " << e.what() << '\n';
    return is_input_status(e.status()) ? kExitInput : kExitInternal;
  } catch (const std::exception& e) {
    err << "casimir-kit: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace casimir::cli
