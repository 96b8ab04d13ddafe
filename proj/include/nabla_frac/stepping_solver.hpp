#pragma once

// Method-of-steps solvers for linear nabla fractional initial value problems
//
//   (nabla^nu_{rho(a)} u)(t) = p(t) u(t) + q(t) u(t - 1) + g(t),  t in N_{a+1},
//   u(a) = u0,
//
// with 0 < nu < 1, and the first-order counterparts used for comparison.
// The difference is based at rho(a) = a - 1, so its convolution runs over
// s = a .. t and the kernel at lag t - s + 1 = 1 is exactly 1: that term is the
// u(t) isolated at each step.

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "nabla_frac/coefficients.hpp"
#include "nabla_frac/errors.hpp"
#include "nabla_frac/grid_ops.hpp"
#include "nabla_frac/summation.hpp"
#include "nabla_frac/taylor_monomial.hpp"

namespace nabla_frac {

/// |1 - p(t)| below this aborts the step.
inline constexpr double singular_step_threshold = 1e-13;

struct LinearProblem {
  double nu = 0.5;
  std::int64_t base = 0;
  Coefficients p;  // multiplies u(t)
  Coefficients q;  // multiplies u(t - 1)
  Coefficients g;  // forcing
  double u0 = 1.0;
};

enum class FirstOrderForm { on_u_t, on_u_lag };

inline const char* to_string(FirstOrderForm form) {
  return form == FirstOrderForm::on_u_t ? "on_u_t" : "on_u_lag";
}

/// Solved u on [base, base + n_max] with per-step defects and the H_{nu-1}(t, rho(a)) envelope.
struct SolutionTrace {
  double order = 0.5;  // nu, or 1 for first-order solves
  std::int64_t base = 0;
  std::vector<double> values;
  std::vector<double> residuals;  // entry 0 is 0: no equation is imposed at t = a
  std::vector<double> envelope;

  std::int64_t t_at(std::size_t n) const { return base + static_cast<std::int64_t>(n); }
};

namespace detail {

inline void require_solver_order(double nu) {
  if (!std::isfinite(nu) || !(nu > 0.0 && nu < 1.0)) {
    throw std::invalid_argument("solver order nu must lie in (0, 1), got " + std::to_string(nu));
  }
}

inline void require_steps(std::int64_t n_max) {
  if (n_max < 0) {
    throw std::invalid_argument("n_max must be >= 0");
  }
}

inline void require_cover(const Coefficients& c, std::int64_t base, std::int64_t n_max, const char* name) {
  if (n_max > 0 && !c.covers(base + 1, base + n_max)) {
    throw std::invalid_argument(std::string("coefficient ") + name + " does not cover t = " +
                                std::to_string(base + 1) + " .. " + std::to_string(base + n_max));
  }
}

// H_{order-1}(a + n, rho(a)) for n = 0..n_max, i.e. monomial offsets n + 1.
inline std::vector<double> decay_envelope(double order, std::int64_t n_max) {
  const auto row = monomial_row<wide_real>(order - 1.0, n_max + 1);
  return std::vector<double>(row.begin() + 1, row.end());
}

}  // namespace detail

/// The sequence E(a + n, a), n = 0..n_max, from E(a, a) = 1 and
///   E(t, a) = c(t) E(t - 1, a) - sum_{s=a}^{t-1} H_{-nu-1}(t, rho(s)) E(s, a).
inline std::vector<double> mittag_leffler_seq(const Coefficients& c, double nu, std::int64_t base,
                                              std::int64_t n_max) {
  detail::require_solver_order(nu);
  detail::require_steps(n_max);
  detail::require_cover(c, base, n_max, "c");
  const auto weights = convolution_weights<wide_real>(nu, n_max + 1);
  std::vector<double> e(static_cast<std::size_t>(n_max) + 1);
  e[0] = 1.0;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const std::int64_t t = base + n;
    CompensatedSum<wide_real> memory;
    for (std::int64_t k = 0; k < n; ++k) {
      // s = a + k, lag = t - s + 1
      memory += weights[static_cast<std::size_t>(n - k + 1)] * static_cast<wide_real>(e[static_cast<std::size_t>(k)]);
    }
    const wide_real next = static_cast<wide_real>(c(t)) * e[static_cast<std::size_t>(n - 1)] - memory.value();
    e[static_cast<std::size_t>(n)] = static_cast<double>(next);
  }
  return e;
}

/// Per-step defect |(nabla^nu_{rho(a)} u)(t) - rhs(t)|, recomputed from the solution
/// through the direct operator. Entry 0 is 0.
inline std::vector<double> fractional_residuals(const LinearProblem& prob, const std::vector<double>& u) {
  std::vector<double> residuals(u.size(), 0.0);
  if (u.size() < 2) {
    return residuals;
  }
  for (double v : u) {
    if (!std::isfinite(v)) {
      residuals.assign(u.size(), std::numeric_limits<double>::quiet_NaN());
      residuals[0] = 0.0;
      return residuals;
    }
  }
  // u lives on N_a; with the grid starting at a the direct operator is based at rho(a).
  const OperatorResult applied = nabla_frac_diff_direct(GridFunction(prob.base, u), prob.nu);
  for (std::size_t n = 1; n < u.size(); ++n) {
    const std::int64_t t = prob.base + static_cast<std::int64_t>(n);
    const double rhs = prob.p(t) * u[n] + prob.q(t) * u[n - 1] + prob.g(t);
    residuals[n] = std::abs(applied.at(t) - rhs);
  }
  return residuals;
}

/// General linear IVP by the method of steps:
///   (1 - p(t)) u(t) = q(t) u(t - 1) + g(t) - sum_{s=a}^{t-1} H_{-nu-1}(t, rho(s)) u(s).
inline SolutionTrace solve_general(const LinearProblem& prob, std::int64_t n_max) {
  detail::require_solver_order(prob.nu);
  detail::require_steps(n_max);
  if (!std::isfinite(prob.u0)) {
    throw std::invalid_argument("initial value u0 must be finite");
  }
  detail::require_cover(prob.p, prob.base, n_max, "p");
  detail::require_cover(prob.q, prob.base, n_max, "q");
  detail::require_cover(prob.g, prob.base, n_max, "g");

  const auto weights = convolution_weights<wide_real>(prob.nu, n_max + 1);
  std::vector<double> u(static_cast<std::size_t>(n_max) + 1);
  u[0] = prob.u0;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const std::int64_t t = prob.base + n;
    const double pivot = 1.0 - prob.p(t);
    if (std::abs(pivot) < singular_step_threshold) {
      throw SingularStep(t, std::abs(pivot));
    }
    CompensatedSum<wide_real> rhs;
    rhs += static_cast<wide_real>(prob.q(t)) * u[static_cast<std::size_t>(n - 1)];
    rhs += static_cast<wide_real>(prob.g(t));
    for (std::int64_t k = 0; k < n; ++k) {
      rhs += -weights[static_cast<std::size_t>(n - k + 1)] * static_cast<wide_real>(u[static_cast<std::size_t>(k)]);
    }
    u[static_cast<std::size_t>(n)] = static_cast<double>(rhs.value() / static_cast<wide_real>(pivot));
  }

  SolutionTrace trace;
  trace.order = prob.nu;
  trace.base = prob.base;
  trace.residuals = fractional_residuals(prob, u);
  trace.values = std::move(u);
  trace.envelope = detail::decay_envelope(prob.nu, n_max);
  return trace;
}

/// (nabla^nu_{rho(a)} u)(t) = c(t) u(t - 1), u(a) = u0.
inline SolutionTrace solve_lagged(const Coefficients& c, double nu, std::int64_t base, double u0,
                                  std::int64_t n_max) {
  LinearProblem prob;
  prob.nu = nu;
  prob.base = base;
  prob.p = Coefficients::constant(0.0);
  prob.q = c;
  prob.g = Coefficients::constant(0.0);
  prob.u0 = u0;
  return solve_general(prob, n_max);
}

/// First-order comparison equations, optionally forced by g:
///   on_u_lag: (nabla u)(t) = c(t) u(t - 1) + g(t)  =>  u(t) = (1 + c(t)) u(t - 1) + g(t)
///   on_u_t:   (nabla u)(t) = c(t) u(t) + g(t)      =>  u(t) = (u(t - 1) + g(t)) / (1 - c(t))
inline SolutionTrace solve_first_order(const Coefficients& c, FirstOrderForm form, std::int64_t base,
                                       double u0, std::int64_t n_max,
                                       const Coefficients& g = Coefficients::constant(0.0)) {
  detail::require_steps(n_max);
  if (!std::isfinite(u0)) {
    throw std::invalid_argument("initial value u0 must be finite");
  }
  detail::require_cover(c, base, n_max, "c");
  detail::require_cover(g, base, n_max, "g");

  std::vector<double> u(static_cast<std::size_t>(n_max) + 1);
  std::vector<double> residuals(u.size(), 0.0);
  u[0] = u0;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const std::int64_t t = base + n;
    const double prev = u[static_cast<std::size_t>(n - 1)];
    double next = 0.0;
    if (form == FirstOrderForm::on_u_lag) {
      next = (1.0 + c(t)) * prev + g(t);
    } else {
      const double pivot = 1.0 - c(t);
      if (std::abs(pivot) < singular_step_threshold) {
        throw SingularStep(t, std::abs(pivot));
      }
      next = (prev + g(t)) / pivot;
    }
    u[static_cast<std::size_t>(n)] = next;
    const double rhs = (form == FirstOrderForm::on_u_lag ? c(t) * prev : c(t) * next) + g(t);
    residuals[static_cast<std::size_t>(n)] = std::abs((next - prev) - rhs);
  }

  SolutionTrace trace;
  trace.order = 1.0;
  trace.base = base;
  trace.values = std::move(u);
  trace.residuals = std::move(residuals);
  trace.envelope = detail::decay_envelope(1.0, n_max);
  return trace;
}

}  // namespace nabla_frac
