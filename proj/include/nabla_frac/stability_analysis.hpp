#pragma once

// Stability criterion |c(t) + nu| <= nu, the envelope bound |E(t, a)| <= H_{nu-1}(t, rho(a)),
// tail classification of finite traces, and first-order vs fractional comparisons.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "nabla_frac/coefficients.hpp"
#include "nabla_frac/stepping_solver.hpp"

namespace nabla_frac {

enum class DecayClass { tends_to_zero, bounded_nonvanishing, unbounded };

inline const char* to_string(DecayClass c) {
  switch (c) {
    case DecayClass::tends_to_zero:
      return "tends_to_zero";
    case DecayClass::bounded_nonvanishing:
      return "bounded_nonvanishing";
    case DecayClass::unbounded:
      return "unbounded";
  }
  return "unknown";
}

/// Class plus the measured log-log slope of the tail maxima (the tail statistic).
struct DecayVerdict {
  DecayClass decay_class = DecayClass::tends_to_zero;
  double tail_stat = 0.0;
};

/// Tail slopes with magnitude below this are treated as flat.
inline constexpr double flat_tail_slope = 0.05;

/// Slack on the envelope inequality: |E| <= env + bound_slack * (1 + env).
inline constexpr double bound_slack = 1e-12;

struct StabilityReport {
  double nu = 0.5;
  std::int64_t base = 0;
  std::vector<bool> criterion_holds;  // t = base + 1 .. base + n_max
  std::vector<bool> bound_ok;         // n = 0 .. n_max
  std::vector<double> sequence;       // E(base + n, base)
  std::vector<double> envelope;       // H_{nu-1}(base + n, rho(base))
  DecayVerdict decay;

  bool criterion_everywhere() const {
    return std::all_of(criterion_holds.begin(), criterion_holds.end(), [](bool b) { return b; });
  }
  bool bound_everywhere() const {
    return std::all_of(bound_ok.begin(), bound_ok.end(), [](bool b) { return b; });
  }
};

/// Classifies the tail of a trace from its running record magnitudes.
///
/// Growth: if the last window sets a new record |x_j| over the record |x_i|
/// of everything before it, and the power-law exponent
///   s = ln(|x_j| / |x_i|) / ln((j + 1) / (i + 1))
/// is >= flat_tail_slope, the trace is unbounded (as is any non-finite trace).
/// Decay: otherwise the same exponent is taken between the suffix maxima
/// starting at the midpoint and at the last window; s <= -flat_tail_slope means
/// tends_to_zero, anything else bounded_nonvanishing. Suffix maxima are
/// monotone, so a tail that plateaus briefly still reads as decaying.
/// The statistic is invariant under scaling of the trace.
inline DecayVerdict decay_classify(std::span<const double> trace, std::int64_t window) {
  if (window < 1) {
    throw std::invalid_argument("decay window must be >= 1");
  }
  const auto w = static_cast<std::size_t>(window);
  if (trace.size() < 2 * w) {
    throw std::invalid_argument("trace length " + std::to_string(trace.size()) +
                                " is shorter than two windows of " + std::to_string(window));
  }
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (!std::all_of(trace.begin(), trace.end(), [](double x) { return std::isfinite(x); })) {
    return {DecayClass::unbounded, inf};
  }
  // Record-holders of |x| over [from, to).
  const auto peak = [&](std::size_t from, std::size_t to) {
    std::size_t at = from;
    for (std::size_t i = from; i < to; ++i) {
      if (std::abs(trace[i]) > std::abs(trace[at])) {
        at = i;
      }
    }
    return at;
  };
  const auto loglog = [&](std::size_t i, std::size_t j) {
    const double mi = std::abs(trace[i]);
    const double mj = std::abs(trace[j]);
    if (i == j || mi == mj) {
      return 0.0;
    }
    return std::log(mj / mi) / std::log(static_cast<double>(j + 1) / static_cast<double>(i + 1));
  };
  const std::size_t n = trace.size();
  const std::size_t last = n - w;

  // Growth: does the last window set a new record over everything before it?
  const std::size_t rec_before = peak(0, last);
  const std::size_t rec_all = peak(0, n);
  if (std::abs(trace[rec_all]) > std::abs(trace[rec_before])) {
    if (trace[rec_before] == 0.0) {
      return {DecayClass::unbounded, inf};
    }
    const double slope = loglog(rec_before, rec_all);
    if (slope >= flat_tail_slope) {
      return {DecayClass::unbounded, slope};
    }
  }

  // Decay: suffix maxima from the midpoint and from the last window.
  const std::size_t sup_mid = peak(std::min(n / 2, last), n);
  const std::size_t sup_last = peak(last, n);
  if (trace[sup_last] == 0.0) {
    return {DecayClass::tends_to_zero, trace[sup_mid] == 0.0 ? 0.0 : -inf};
  }
  const double slope = loglog(sup_mid, sup_last);
  if (slope <= -flat_tail_slope) {
    return {DecayClass::tends_to_zero, slope};
  }
  return {DecayClass::bounded_nonvanishing, slope};
}

/// Default classification window for a trace over n = 0..n_max.
inline std::int64_t default_window(std::int64_t n_max) {
  return std::max<std::int64_t>(1, (n_max + 1) / 10);
}

/// |c(t) + nu| <= nu for t = base + 1 .. base + n_max (a few ulps of rounding allowed).
inline std::vector<bool> criterion_check(const Coefficients& c, double nu, std::int64_t base,
                                         std::int64_t n_max) {
  detail::require_solver_order(nu);
  detail::require_steps(n_max);
  std::vector<bool> holds(static_cast<std::size_t>(n_max));
  for (std::int64_t i = 0; i < n_max; ++i) {
    const double ct = c(base + 1 + i);
    const double ulps = 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(ct));
    holds[static_cast<std::size_t>(i)] = std::abs(ct + nu) <= nu + ulps;
  }
  return holds;
}

inline bool envelope_holds(double value, double envelope) {
  return std::abs(value) <= envelope + bound_slack * (1.0 + envelope);
}

/// Evaluates the criterion, the envelope bound of E_{c,nu}, and the decay class of E.
inline StabilityReport bound_check(const Coefficients& c, double nu, std::int64_t base, std::int64_t n_max,
                                   std::int64_t window = 0) {
  if (n_max < 1) {
    throw std::invalid_argument("bound_check needs n_max >= 1");
  }
  StabilityReport report;
  report.nu = nu;
  report.base = base;
  report.criterion_holds = criterion_check(c, nu, base, n_max);
  report.sequence = mittag_leffler_seq(c, nu, base, n_max);
  report.envelope = detail::decay_envelope(nu, n_max);
  report.bound_ok.resize(report.sequence.size());
  for (std::size_t n = 0; n < report.sequence.size(); ++n) {
    report.bound_ok[n] = envelope_holds(report.sequence[n], report.envelope[n]);
  }
  report.decay = decay_classify(report.sequence, window > 0 ? window : default_window(n_max));
  return report;
}

struct OrderComparison {
  FirstOrderForm form = FirstOrderForm::on_u_lag;
  SolutionTrace first_order;
  SolutionTrace fractional;
  DecayVerdict first_order_decay;
  DecayVerdict fractional_decay;
};

/// Runs the first-order equation and its fractional counterpart on the same data:
/// on_u_lag pairs (nabla u)(t) = c(t) u(t-1) with (nabla^nu_{rho(a)} u)(t) = c(t) u(t-1);
/// on_u_t pairs (nabla u)(t) = c(t) u(t) with (nabla^nu_{rho(a)} u)(t) = c(t) u(t).
inline OrderComparison compare_orders(const Coefficients& c, double nu, FirstOrderForm form, std::int64_t base,
                                      double u0, std::int64_t n_max) {
  if (n_max < 1) {
    throw std::invalid_argument("compare_orders needs n_max >= 1");
  }
  detail::require_solver_order(nu);
  OrderComparison out;
  out.form = form;
  out.first_order = solve_first_order(c, form, base, u0, n_max);
  if (form == FirstOrderForm::on_u_lag) {
    out.fractional = solve_lagged(c, nu, base, u0, n_max);
  } else {
    LinearProblem prob;
    prob.nu = nu;
    prob.base = base;
    prob.p = c;
    prob.q = Coefficients::constant(0.0);
    prob.g = Coefficients::constant(0.0);
    prob.u0 = u0;
    out.fractional = solve_general(prob, n_max);
  }
  const std::int64_t window = default_window(n_max);
  out.first_order_decay = decay_classify(out.first_order.values, window);
  out.fractional_decay = decay_classify(out.fractional.values, window);
  return out;
}

struct ScanCell {
  double nu = 0.0;
  double c = 0.0;
  bool criterion = false;
  DecayVerdict decay;
};

/// Constant-coefficient sweep of (nabla^nu_{rho(0)} u)(t) = c u(t-1), u(0) = 1.
/// Cells are ordered nu-major; the result is identical for any thread count.
inline std::vector<ScanCell> stability_scan(std::span<const double> nu_grid, std::span<const double> c_grid,
                                            std::int64_t n_max, unsigned threads = 1) {
  for (double nu : nu_grid) {
    detail::require_solver_order(nu);
  }
  if (n_max < 1) {
    throw std::invalid_argument("stability_scan needs n_max >= 1");
  }
  std::vector<ScanCell> cells(nu_grid.size() * c_grid.size());
  const auto run_cell = [&](std::size_t idx) {
    ScanCell& cell = cells[idx];
    cell.nu = nu_grid[idx / c_grid.size()];
    cell.c = c_grid[idx % c_grid.size()];
    const auto coeff = Coefficients::constant(cell.c);
    cell.criterion = criterion_check(coeff, cell.nu, 0, 1).front();
    const SolutionTrace trace = solve_lagged(coeff, cell.nu, 0, 1.0, n_max);
    cell.decay = decay_classify(trace.values, default_window(n_max));
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(cells.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      run_cell(i);
    }
    return cells;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < cells.size(); i += workers) {
        run_cell(i);
      }
    });
  }
  for (auto& th : pool) {
    th.join();
  }
  return cells;
}

}  // namespace nabla_frac
