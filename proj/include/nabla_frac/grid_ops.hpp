#pragma once

// Nabla operators on grid functions.
//
// Base-point bookkeeping: an operator "based at a" acts on u defined on N_{a+1}.
// All fractional operators here take the operator base to be u.base() - 1, so a
// GridFunction starting at a + 1 is summed/differenced from a.
//
//   nabla_diff                 N_{b}   -> N_{b+1}
//   nabla_diff_n(N)            N_{b}   -> N_{b+N}
//   nabla_sum(nu)              N_{a+1} -> N_a       (value 0 at a)
//   nabla_frac_diff_composed   N_{a+1} -> N_{a+N},  N = ceil(nu)
//   nabla_frac_diff_direct     N_{a+1} -> N_{a+1}

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "nabla_frac/errors.hpp"
#include "nabla_frac/grid_function.hpp"
#include "nabla_frac/summation.hpp"
#include "nabla_frac/taylor_monomial.hpp"

namespace nabla_frac {

namespace detail {

inline void require_positive_order(double nu) {
  if (!std::isfinite(nu) || !(nu > 0.0)) {
    throw std::invalid_argument("order nu must be a finite positive number");
  }
}

inline bool is_integer_order(double nu) { return std::floor(nu) == nu; }

inline std::int64_t ceil_order(double nu) { return static_cast<std::int64_t>(std::ceil(nu)); }

// out[k] = sum_{j=0}^{k} kernel[k - j + 1] * x[j], accumulated in wide precision.
template <typename Input>
std::vector<double> causal_convolution(const std::vector<wide_real>& kernel, const Input& x) {
  const std::size_t len = x.size();
  std::vector<double> out(len);
  for (std::size_t k = 0; k < len; ++k) {
    CompensatedSum<wide_real> acc;
    for (std::size_t j = 0; j <= k; ++j) {
      acc += kernel[k - j + 1] * static_cast<wide_real>(x[j]);
    }
    out[k] = static_cast<double>(acc.value());
  }
  return out;
}

inline std::vector<double> difference_n(std::vector<double> v, std::int64_t n) {
  for (std::int64_t step = 0; step < n; ++step) {
    for (std::size_t k = v.size() - 1; k > 0; --k) {
      v[k] -= v[k - 1];
    }
    v.erase(v.begin());
  }
  return v;
}

}  // namespace detail

/// (nabla u)(t) = u(t) - u(t - 1).
inline OperatorResult nabla_diff(const GridFunction& u) {
  if (u.size() < 2) {
    throw DomainTooShort("nabla difference needs at least 2 points");
  }
  const auto v = u.values();
  return {u.base() + 1, detail::difference_n(std::vector<double>(v.begin(), v.end()), 1)};
}

/// N-fold composition of nabla_diff.
inline OperatorResult nabla_diff_n(const GridFunction& u, std::int64_t order) {
  if (order < 1) {
    throw std::invalid_argument("difference order N must be >= 1");
  }
  if (static_cast<std::int64_t>(u.size()) < order + 1) {
    throw DomainTooShort("order-" + std::to_string(order) + " nabla difference needs at least " +
                         std::to_string(order + 1) + " points, got " + std::to_string(u.size()));
  }
  const auto v = u.values();
  return {u.base() + order, detail::difference_n(std::vector<double>(v.begin(), v.end()), order)};
}

/// Fractional sum of order nu > 0 based at a = u.base() - 1; result starts at a with value 0.
inline OperatorResult nabla_sum(const GridFunction& u, double nu) {
  detail::require_positive_order(nu);
  const auto len = static_cast<std::int64_t>(u.size());
  const auto kernel = monomial_row<wide_real>(nu - 1.0, len);
  auto body = detail::causal_convolution(kernel, u.values());
  std::vector<double> values;
  values.reserve(body.size() + 1);
  values.push_back(0.0);
  values.insert(values.end(), body.begin(), body.end());
  return {u.base() - 1, std::move(values)};
}

/// Riemann-Liouville difference as nabla^N of the (N - nu)-th sum, N = ceil(nu).
/// Integer nu reduces to the classical nabla^N.
inline OperatorResult nabla_frac_diff_composed(const GridFunction& u, double nu) {
  detail::require_positive_order(nu);
  const std::int64_t order = detail::ceil_order(nu);
  if (detail::is_integer_order(nu)) {
    return nabla_diff_n(u, order);
  }
  if (static_cast<std::int64_t>(u.size()) < order) {
    throw DomainTooShort("composed fractional difference of order " + std::to_string(nu) +
                         " needs at least " + std::to_string(order) + " points");
  }
  const OperatorResult sum = nabla_sum(u, static_cast<double>(order) - nu);
  return {sum.base + order, detail::difference_n(sum.values, order)};
}

/// Riemann-Liouville difference as a single convolution against H_{-nu-1};
/// defined from u.base() onward. Non-integer nu only.
inline OperatorResult nabla_frac_diff_direct(const GridFunction& u, double nu) {
  detail::require_positive_order(nu);
  if (detail::is_integer_order(nu)) {
    throw std::invalid_argument("direct fractional difference needs non-integer nu; use nabla_diff_n");
  }
  const auto len = static_cast<std::int64_t>(u.size());
  const auto kernel = convolution_weights<wide_real>(nu, len);
  return {u.base(), detail::causal_convolution(kernel, u.values())};
}

/// Direct form for non-integer nu, classical difference for integer nu.
inline OperatorResult nabla_frac_diff(const GridFunction& u, double nu) {
  detail::require_positive_order(nu);
  if (detail::is_integer_order(nu)) {
    return nabla_diff_n(u, detail::ceil_order(nu));
  }
  return nabla_frac_diff_direct(u, nu);
}

/// max_{n_min <= n <= n_max} |(nabla^nu_a H_mu(., a))(a + n) - H_{mu - nu}(a + n, a)|.
///
/// A target order within a few ulps of an integer is snapped to it, so mu = nu - 1
/// hits the zero rule for H_{-1}. Note the operator value at n = 1 is always
/// H_mu(a + 1, a) = 1 (a one-term sum), so that target deviates by exactly 1 there.
inline double power_rule_check(double mu, double nu, std::int64_t n_max, std::int64_t n_min = 1) {
  detail::require_positive_order(nu);
  detail::require_finite_order(mu, "monomial order mu");
  if (detail::is_integer_order(nu)) {
    throw std::invalid_argument("power_rule_check needs non-integer nu");
  }
  if (n_min < 1 || n_max < n_min) {
    throw std::invalid_argument("power_rule_check needs 1 <= n_min <= n_max");
  }
  double order = mu - nu;
  const double nearest = std::round(order);
  if (std::abs(order - nearest) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(nearest))) {
    order = nearest;
  }
  const auto source = monomial_row<wide_real>(mu, n_max);
  const auto target = monomial_row<wide_real>(order, n_max);
  const GridFunction u(1, std::vector<double>(source.begin() + 1, source.end()));
  const OperatorResult applied = nabla_frac_diff_direct(u, nu);
  double worst = 0.0;
  for (std::int64_t n = n_min; n <= n_max; ++n) {
    const double expected = static_cast<double>(target[static_cast<std::size_t>(n)]);
    worst = std::max(worst, std::abs(applied.at(n) - expected));
  }
  return worst;
}

}  // namespace nabla_frac
