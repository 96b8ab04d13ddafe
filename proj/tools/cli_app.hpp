#pragma once

// Command-line front end: monomial, apply, solve, compare, scan.
//
// Exit codes: 0 success, 1 I/O failure, 2 invalid parameters or input,
// 3 domain too short for the operator, 4 singular step.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "nabla_frac/io.hpp"
#include "nabla_frac/nabla_frac.hpp"

namespace nabla_frac::cli {

enum ExitCode : int { ok = 0, io_failure = 1, invalid = 2, domain = 3, singular = 4 };

enum class Command { monomial, apply, solve, compare, scan };

/// Parsed command line. Fields irrelevant to the command keep their defaults.
struct RunConfig {
  Command command = Command::monomial;
  double nu = 0.5;
  double mu = 0.0;
  std::int64_t base = 0;
  double u0 = 1.0;
  std::optional<std::int64_t> n_max;  // unset: command default
  std::string coefficients = "0";
  std::string forcing;
  std::optional<std::string> form;
  std::string order = "fractional";
  std::string op;
  std::string input;
  std::string output;  // empty: stdout
  std::string format = "csv";
  std::string traces;
  std::string report;
  std::vector<double> nu_grid{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  double c_min = -2.0;
  double c_max = 0.5;
  double c_step = 0.05;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void require(bool condition, const std::string& message) {
  if (!condition) {
    throw UsageError(message);
  }
}

inline void require_solver_nu(double nu) {
  require(std::isfinite(nu) && nu > 0.0 && nu < 1.0, "--nu must lie in the open interval (0, 1)");
}

inline std::optional<double> parse_number(const std::string& text) {
  std::size_t used = 0;
  try {
    const double v = std::stod(text, &used);
    if (used == text.size() && std::isfinite(v)) {
      return v;
    }
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

/// Coefficient spec: a number, a preset (c2-on-u-t: c = 2; c0-on-u-lag: c = 0), or an
/// `index,value` CSV file giving c(t) at absolute grid points.
struct CoefficientSpec {
  Coefficients values;
  std::optional<FirstOrderForm> preferred_form;
};

inline CoefficientSpec parse_coefficients(const std::string& spec) {
  if (spec == "c2-on-u-t") {
    return {Coefficients::constant(2.0), FirstOrderForm::on_u_t};
  }
  if (spec == "c0-on-u-lag") {
    return {Coefficients::constant(0.0), FirstOrderForm::on_u_lag};
  }
  if (const auto v = parse_number(spec)) {
    return {Coefficients::constant(*v), std::nullopt};
  }
  std::ifstream in(spec);
  if (!in) {
    throw UsageError("coefficient spec '" + spec + "' is neither a number, a preset, nor a readable CSV file");
  }
  const GridFunction table = io::read_grid_csv(in);
  const auto v = table.values();
  return {Coefficients::sequence(table.base(), std::vector<double>(v.begin(), v.end())), std::nullopt};
}

inline FirstOrderForm parse_form(const std::string& text) {
  if (text == "on_u_t") {
    return FirstOrderForm::on_u_t;
  }
  if (text == "on_u_lag") {
    return FirstOrderForm::on_u_lag;
  }
  throw UsageError("--form must be on_u_t or on_u_lag");
}

inline FirstOrderForm resolve_form(const RunConfig& cfg, const CoefficientSpec& spec) {
  if (cfg.form) {
    return parse_form(*cfg.form);
  }
  return spec.preferred_form.value_or(FirstOrderForm::on_u_lag);
}

inline std::int64_t steps_or(const RunConfig& cfg, std::int64_t fallback) {
  const std::int64_t n = cfg.n_max.value_or(fallback);
  require(n >= 0, "--n-max must be >= 0");
  return n;
}

inline nlohmann::json problem_json(const RunConfig& cfg, const char* form) {
  nlohmann::json j{{"base", cfg.base}, {"u0", cfg.u0}, {"coefficients", cfg.coefficients}, {"form", form}};
  if (cfg.order == "1") {
    j["order"] = 1;
  } else {
    j["nu"] = cfg.nu;
  }
  if (!cfg.forcing.empty()) {
    j["forcing"] = cfg.forcing;
  }
  return j;
}

inline std::vector<double> c_grid(const RunConfig& cfg) {
  require(std::isfinite(cfg.c_min) && std::isfinite(cfg.c_max) && cfg.c_min <= cfg.c_max,
          "--c-min must not exceed --c-max");
  require(std::isfinite(cfg.c_step) && cfg.c_step > 0.0, "--c-step must be > 0");
  const auto count = static_cast<std::int64_t>(std::floor((cfg.c_max - cfg.c_min) / cfg.c_step + 1e-9)) + 1;
  require(count <= 100000, "c grid has too many points");
  std::vector<double> grid;
  for (std::int64_t k = 0; k < count; ++k) {
    // snap to 1e-12 so that e.g. -2 + 36 * 0.05 prints and compares as -0.2
    grid.push_back(std::round((cfg.c_min + static_cast<double>(k) * cfg.c_step) * 1e12) / 1e12);
  }
  return grid;
}

inline unsigned scan_threads() {
  if (const char* env = std::getenv("NABLA_FRAC_THREADS")) {
    const auto v = parse_number(env);
    if (v && *v >= 1.0) {
      return static_cast<unsigned>(*v);
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace detail

/// Runs one command against `out` (the payload stream).
inline int run(const RunConfig& cfg, std::ostream& out) {
  const bool json = cfg.format == "json";
  detail::require(cfg.format == "csv" || cfg.format == "json", "--format must be csv or json");

  switch (cfg.command) {
    case Command::monomial: {
      detail::require(std::isfinite(cfg.mu), "--mu must be finite");
      const std::int64_t n_max = detail::steps_or(cfg, 0);
      const auto row = monomial_row<wide_real>(cfg.mu, n_max);
      if (json) {
        std::vector<double> values(row.begin(), row.end());
        out << nlohmann::json{{"mu", cfg.mu}, {"values", values}}.dump() << '\n';
      } else {
        out << "n,value\n";
        for (std::size_t n = 0; n < row.size(); ++n) {
          out << n << ',' << io::format_real(static_cast<double>(row[n])) << '\n';
        }
      }
      return ok;
    }
    case Command::apply: {
      std::ifstream in(cfg.input);
      detail::require(static_cast<bool>(in), "cannot read --input '" + cfg.input + "'");
      const GridFunction u = io::read_grid_csv(in);
      OperatorResult result;
      if (cfg.op == "nabla") {
        result = nabla_diff(u);
      } else {
        detail::require(std::isfinite(cfg.nu) && cfg.nu > 0.0, "--nu must be > 0");
        if (cfg.op == "sum") {
          result = nabla_sum(u, cfg.nu);
        } else if (cfg.op == "diff-direct") {
          detail::require(std::floor(cfg.nu) != cfg.nu, "diff-direct needs a non-integer --nu");
          result = nabla_frac_diff_direct(u, cfg.nu);
        } else if (cfg.op == "diff-composed") {
          result = nabla_frac_diff_composed(u, cfg.nu);
        } else {
          throw UsageError("--op must be one of sum, diff-direct, diff-composed, nabla");
        }
      }
      if (json) {
        out << nlohmann::json{{"operator", cfg.op}, {"base", result.base}, {"values", result.values}}.dump() << '\n';
      } else {
        io::write_operator_csv(out, result);
      }
      return ok;
    }
    case Command::solve: {
      const std::int64_t n_max = detail::steps_or(cfg, 100);
      const auto spec = detail::parse_coefficients(cfg.coefficients);
      const FirstOrderForm form = detail::resolve_form(cfg, spec);
      const Coefficients forcing =
          cfg.forcing.empty() ? Coefficients::constant(0.0) : detail::parse_coefficients(cfg.forcing).values;
      SolutionTrace trace;
      if (cfg.order == "1") {
        trace = solve_first_order(spec.values, form, cfg.base, cfg.u0, n_max, forcing);
      } else {
        detail::require(cfg.order == "fractional", "--order must be fractional or 1");
        detail::require_solver_nu(cfg.nu);
        LinearProblem prob;
        prob.nu = cfg.nu;
        prob.base = cfg.base;
        prob.p = form == FirstOrderForm::on_u_t ? spec.values : Coefficients::constant(0.0);
        prob.q = form == FirstOrderForm::on_u_lag ? spec.values : Coefficients::constant(0.0);
        prob.g = forcing;
        prob.u0 = cfg.u0;
        trace = solve_general(prob, n_max);
        if (!cfg.report.empty()) {
          detail::require(form == FirstOrderForm::on_u_lag, "--report applies to the on_u_lag form");
          detail::require(n_max >= 1, "--report needs --n-max >= 1");
          std::ofstream rep(cfg.report);
          if (!rep) {
            throw std::ios_base::failure("cannot write --report '" + cfg.report + "'");
          }
          rep << io::report_to_json(bound_check(spec.values, cfg.nu, cfg.base, n_max)).dump(2) << '\n';
        }
      }
      if (json) {
        out << io::trace_to_json(trace, detail::problem_json(cfg, to_string(form))).dump() << '\n';
      } else {
        io::write_trace_csv(out, trace);
      }
      return ok;
    }
    case Command::compare: {
      detail::require_solver_nu(cfg.nu);
      const std::int64_t n_max = detail::steps_or(cfg, 5000);
      detail::require(n_max >= 1, "--n-max must be >= 1 for compare");
      const auto spec = detail::parse_coefficients(cfg.coefficients);
      const FirstOrderForm form = detail::resolve_form(cfg, spec);
      const OrderComparison cmp = compare_orders(spec.values, cfg.nu, form, cfg.base, cfg.u0, n_max);
      if (!cfg.traces.empty()) {
        std::ofstream traces(cfg.traces);
        if (!traces) {
          throw std::ios_base::failure("cannot write --traces '" + cfg.traces + "'");
        }
        io::write_comparison_csv(traces, cmp);
      }
      out << io::verdict_to_json(cmp).dump(2) << '\n';
      return ok;
    }
    case Command::scan: {
      detail::require(!cfg.nu_grid.empty(), "--nu-grid must not be empty");
      for (double nu : cfg.nu_grid) {
        detail::require(std::isfinite(nu) && nu > 0.0 && nu < 1.0,
                        "every --nu-grid value must lie in the open interval (0, 1)");
      }
      const std::int64_t n_max = detail::steps_or(cfg, 2000);
      detail::require(n_max >= 1, "--n-max must be >= 1 for scan");
      const auto cells = stability_scan(cfg.nu_grid, detail::c_grid(cfg), n_max, detail::scan_threads());
      if (json) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& cell : cells) {
          rows.push_back({{"nu", cell.nu},
                          {"c", cell.c},
                          {"criterion", cell.criterion},
                          {"decay_class", to_string(cell.decay.decay_class)},
                          {"tail_stat", io::format_real(cell.decay.tail_stat)}});
        }
        out << rows.dump() << '\n';
      } else {
        io::write_scan_csv(out, cells);
      }
      return ok;
    }
  }
  return ok;
}

/// Parses argv, dispatches, and maps failures onto exit codes. Diagnostics go to `err`;
/// payload goes to --output if given, else `out`.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete nabla fractional calculus toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", cfg.output, "Output file (default: stdout)");
    sub->add_option("--format", cfg.format, "csv or json");
  };
  const auto add_problem = [&](CLI::App* sub) {
    sub->add_option("--nu", cfg.nu, "Fractional order");
    sub->add_option("--c", cfg.coefficients, "Coefficient: number, preset (c2-on-u-t, c0-on-u-lag) or CSV path");
    sub->add_option("--form", cfg.form, "on_u_lag (c multiplies u(t-1)) or on_u_t (c multiplies u(t))");
    sub->add_option("--u0", cfg.u0, "Initial value u(a)");
    sub->add_option("--base", cfg.base, "Base point a");
    sub->add_option("--n-max", cfg.n_max, "Number of steps");
  };

  auto* monomial = app.add_subcommand("monomial", "Tabulate H_mu(a + n, a) for n = 0..n_max");
  monomial->add_option("--mu", cfg.mu, "Order mu")->required();
  monomial->add_option("--n-max", cfg.n_max, "Largest offset")->required();
  add_output(monomial);

  auto* apply = app.add_subcommand("apply", "Apply an operator to an index,value CSV grid function");
  apply->add_option("--op", cfg.op, "sum, diff-direct, diff-composed or nabla")->required();
  apply->add_option("--nu", cfg.nu, "Order");
  apply->add_option("--input", cfg.input, "Input CSV")->required();
  add_output(apply);

  auto* solve = app.add_subcommand("solve", "Solve a linear initial value problem by the method of steps");
  add_problem(solve);
  solve->add_option("--order", cfg.order, "fractional (default) or 1");
  solve->add_option("--g", cfg.forcing, "Forcing g(t): number or CSV path");
  solve->add_option("--report", cfg.report, "Write a stability report JSON (on_u_lag form)");
  add_output(solve);

  auto* compare = app.add_subcommand("compare", "Compare first-order and fractional decay on the same data");
  add_problem(compare);
  compare->add_option("--traces", cfg.traces, "Write both traces as CSV");
  compare->add_option("-o,--output", cfg.output, "Verdict JSON file (default: stdout)");

  auto* scan = app.add_subcommand("scan", "Sweep constant-coefficient lagged equations over (nu, c)");
  scan->add_option("--nu-grid", cfg.nu_grid, "Orders, comma separated")->delimiter(',');
  scan->add_option("--c-min", cfg.c_min, "Smallest c");
  scan->add_option("--c-max", cfg.c_max, "Largest c");
  scan->add_option("--c-step", cfg.c_step, "Spacing of the c grid");
  scan->add_option("--n-max", cfg.n_max, "Steps per cell");
  add_output(scan);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return invalid;
  }

  if (monomial->parsed()) {
    cfg.command = Command::monomial;
  } else if (apply->parsed()) {
    cfg.command = Command::apply;
  } else if (solve->parsed()) {
    cfg.command = Command::solve;
  } else if (compare->parsed()) {
    cfg.command = Command::compare;
  } else {
    cfg.command = Command::scan;
  }

  try {
    std::ostringstream payload;
    const int code = run(cfg, payload);
    if (cfg.output.empty()) {
      out << payload.str();
    } else {
      std::ofstream file(cfg.output, std::ios::binary);
      if (!file || !(file << payload.str())) {
        err << "error: cannot write '" << cfg.output << "'\n";
        return io_failure;
      }
    }
    return code;
  } catch (const SingularStep& e) {
    err << "error: " << e.what() << '\n';
    return singular;
  } catch (const DomainTooShort& e) {
    err << "error: " << e.what() << '\n';
    return domain;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return io_failure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return invalid;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return invalid;
  }
}

}  // namespace nabla_frac::cli
