#pragma once

// CSV and JSON formats.
//
//   grid function     index,value            (optional leading "# ..." comment lines)
//   operator result   # base=<b> / index,value
//   solution trace    n,t,u,residual,envelope
//   scan              nu,c,decay_class,tail_stat
//
// Floating values are written with 17 significant digits.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nabla_frac/errors.hpp"
#include "nabla_frac/grid_function.hpp"
#include "nabla_frac/stability_analysis.hpp"
#include "nabla_frac/stepping_solver.hpp"

namespace nabla_frac::io {

inline std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace detail {

inline std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::vector<std::string> split(const std::string& line, char sep = ',') {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, sep)) {
    fields.push_back(trim(field));
  }
  if (!line.empty() && line.back() == sep) {
    fields.emplace_back();
  }
  return fields;
}

inline std::int64_t parse_index(const std::string& s, std::size_t line) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw CsvError(line, "index '" + s + "' is not an integer");
  }
  if (used != s.size()) {
    throw CsvError(line, "index '" + s + "' is not an integer");
  }
  return v;
}

inline double parse_real(const std::string& s, std::size_t line) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw CsvError(line, "value '" + s + "' is not a number");
  }
  if (used != s.size() || !std::isfinite(v)) {
    throw CsvError(line, "value '" + s + "' is not a finite number");
  }
  return v;
}

}  // namespace detail

/// Reads `index,value` rows with consecutive indices. Blank lines and lines
/// starting with '#' are skipped.
inline GridFunction read_grid_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  std::int64_t base = 0;
  std::vector<double> values;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = detail::trim(line);
    if (text.empty() || text.front() == '#') {
      continue;
    }
    const auto fields = detail::split(text);
    if (!header_seen) {
      if (fields.size() != 2 || fields[0] != "index" || fields[1] != "value") {
        throw CsvError(line_no, "expected header 'index,value'");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != 2) {
      throw CsvError(line_no, "expected 2 fields, got " + std::to_string(fields.size()));
    }
    const std::int64_t index = detail::parse_index(fields[0], line_no);
    const double value = detail::parse_real(fields[1], line_no);
    if (values.empty()) {
      base = index;
    } else if (index != base + static_cast<std::int64_t>(values.size())) {
      throw CsvError(line_no, "index " + std::to_string(index) + " is not consecutive (expected " +
                                  std::to_string(base + static_cast<std::int64_t>(values.size())) + ")");
    }
    values.push_back(value);
  }
  if (!header_seen) {
    throw CsvError(line_no, "missing header 'index,value'");
  }
  if (values.empty()) {
    throw CsvError(line_no, "no data rows");
  }
  return GridFunction(base, std::move(values));
}

inline void write_grid_csv(std::ostream& out, const GridFunction& u) {
  out << "index,value\n";
  for (std::int64_t t = u.base(); t <= u.last(); ++t) {
    out << t << ',' << format_real(u(t)) << '\n';
  }
}

inline void write_operator_csv(std::ostream& out, const OperatorResult& r) {
  out << "# base=" << r.base << '\n';
  out << "index,value\n";
  for (std::size_t k = 0; k < r.values.size(); ++k) {
    out << r.base + static_cast<std::int64_t>(k) << ',' << format_real(r.values[k]) << '\n';
  }
}

inline void write_trace_csv(std::ostream& out, const SolutionTrace& trace) {
  out << "n,t,u,residual,envelope\n";
  for (std::size_t n = 0; n < trace.values.size(); ++n) {
    out << n << ',' << trace.t_at(n) << ',' << format_real(trace.values[n]) << ','
        << format_real(trace.residuals[n]) << ',' << format_real(trace.envelope[n]) << '\n';
  }
}

/// Trace columns plus problem metadata, e.g. {"nu", "base", "u0", "coefficients"}.
inline nlohmann::json trace_to_json(const SolutionTrace& trace, nlohmann::json problem) {
  nlohmann::json j;
  j["problem"] = std::move(problem);
  j["order"] = trace.order;
  j["base"] = trace.base;
  std::vector<std::int64_t> t(trace.values.size());
  for (std::size_t n = 0; n < t.size(); ++n) {
    t[n] = trace.t_at(n);
  }
  j["t"] = t;
  j["u"] = trace.values;
  j["residual"] = trace.residuals;
  j["envelope"] = trace.envelope;
  return j;
}

/// Side-by-side first-order and fractional traces: n,t,u_first_order,u_fractional,envelope.
inline void write_comparison_csv(std::ostream& out, const OrderComparison& cmp) {
  out << "n,t,u_first_order,u_fractional,envelope\n";
  for (std::size_t n = 0; n < cmp.fractional.values.size(); ++n) {
    out << n << ',' << cmp.fractional.t_at(n) << ',' << format_real(cmp.first_order.values[n]) << ','
        << format_real(cmp.fractional.values[n]) << ',' << format_real(cmp.fractional.envelope[n]) << '\n';
  }
}

inline nlohmann::json verdict_to_json(const OrderComparison& cmp) {
  return {{"first_order", to_string(cmp.first_order_decay.decay_class)},
          {"fractional", to_string(cmp.fractional_decay.decay_class)},
          {"form", to_string(cmp.form)},
          {"first_order_tail_stat", format_real(cmp.first_order_decay.tail_stat)},
          {"fractional_tail_stat", format_real(cmp.fractional_decay.tail_stat)}};
}

inline void write_scan_csv(std::ostream& out, const std::vector<ScanCell>& cells) {
  out << "nu,c,decay_class,tail_stat\n";
  for (const auto& cell : cells) {
    out << format_real(cell.nu) << ',' << format_real(cell.c) << ',' << to_string(cell.decay.decay_class) << ','
        << format_real(cell.decay.tail_stat) << '\n';
  }
}

inline nlohmann::json report_to_json(const StabilityReport& r) {
  return {{"nu", r.nu},
          {"base", r.base},
          {"criterion", r.criterion_holds},
          {"criterion_everywhere", r.criterion_everywhere()},
          {"bound_ok", r.bound_ok},
          {"bound_everywhere", r.bound_everywhere()},
          {"sequence", r.sequence},
          {"envelope", r.envelope},
          {"decay_class", to_string(r.decay.decay_class)},
          {"tail_stat", format_real(r.decay.tail_stat)}};
}

}  // namespace nabla_frac::io
