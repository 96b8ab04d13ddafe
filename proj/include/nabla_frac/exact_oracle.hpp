#pragma once

// Exact rational reference implementations used as ground truth by the tests.
// Every routine is written directly from the defining sums and recurrences and
// shares no code with the floating-point kernels.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nabla_frac::exact {

using ExactRational = boost::multiprecision::cpp_rational;
using ExactInteger = boost::multiprecision::cpp_int;

/// Cost guard for oracle_solve.
inline constexpr std::int64_t max_oracle_steps = 100;

inline ExactRational rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) {
    throw std::invalid_argument("zero denominator");
  }
  return ExactRational(ExactInteger(num), ExactInteger(den));
}

inline bool is_negative_integer(const ExactRational& r) {
  return r < 0 && boost::multiprecision::denominator(r) == 1;
}

inline double to_double(const ExactRational& r) { return r.convert_to<double>(); }

/// Exact H_mu(a + n, a): h(0) = 0, h(1) = 1, h(k + 1) = h(k) (k + mu) / k.
inline ExactRational oracle_monomial(const ExactRational& mu, std::int64_t n) {
  if (is_negative_integer(mu)) {
    throw std::invalid_argument("oracle_monomial: negative integer order");
  }
  if (n < 0) {
    throw std::invalid_argument("oracle_monomial: negative offset");
  }
  if (n == 0) {
    return ExactRational(0);
  }
  ExactRational h(1);
  for (std::int64_t k = 1; k < n; ++k) {
    h *= (ExactRational(k) + mu) / ExactRational(k);
  }
  return h;
}

/// Exact H_mu(a + k, a) for k = 0..n_max.
inline std::vector<ExactRational> oracle_monomial_row(const ExactRational& mu, std::int64_t n_max) {
  if (is_negative_integer(mu)) {
    throw std::invalid_argument("oracle_monomial_row: negative integer order");
  }
  std::vector<ExactRational> row(static_cast<std::size_t>(n_max) + 1);
  if (n_max >= 1) {
    row[1] = 1;
  }
  for (std::int64_t k = 1; k < n_max; ++k) {
    row[static_cast<std::size_t>(k) + 1] = row[static_cast<std::size_t>(k)] * (ExactRational(k) + mu) / ExactRational(k);
  }
  return row;
}

/// (nabla^{-nu}_a u)(a + k), k = 0..len, for u given on a + 1 .. a + len.
inline std::vector<ExactRational> oracle_nabla_sum(const std::vector<ExactRational>& u, const ExactRational& nu) {
  const auto kernel = oracle_monomial_row(nu - 1, static_cast<std::int64_t>(u.size()));
  std::vector<ExactRational> out(u.size() + 1);
  out[0] = 0;
  for (std::size_t k = 1; k <= u.size(); ++k) {
    ExactRational acc(0);
    for (std::size_t j = 1; j <= k; ++j) {
      acc += kernel[k - j + 1] * u[j - 1];
    }
    out[k] = acc;
  }
  return out;
}

/// Classical N-th backward difference; result is shorter by `order`.
inline std::vector<ExactRational> oracle_nabla_diff_n(std::vector<ExactRational> v, std::int64_t order) {
  for (std::int64_t step = 0; step < order; ++step) {
    std::vector<ExactRational> next;
    for (std::size_t k = 1; k < v.size(); ++k) {
      next.push_back(v[k] - v[k - 1]);
    }
    v = std::move(next);
  }
  return v;
}

/// (nabla^nu_a u)(a + k), k = 1..len, by the convolution against H_{-nu-1}.
inline std::vector<ExactRational> oracle_frac_diff(const std::vector<ExactRational>& u, const ExactRational& nu) {
  const auto kernel = oracle_monomial_row(-nu - 1, static_cast<std::int64_t>(u.size()));
  std::vector<ExactRational> out(u.size());
  for (std::size_t k = 1; k <= u.size(); ++k) {
    ExactRational acc(0);
    for (std::size_t j = 1; j <= k; ++j) {
      acc += kernel[k - j + 1] * u[j - 1];
    }
    out[k - 1] = acc;
  }
  return out;
}

/// (nabla^nu_a u)(a + k), k = N..len, as nabla^N of the (N - nu)-th sum; N = ceil(nu).
inline std::vector<ExactRational> oracle_frac_diff_composed(const std::vector<ExactRational>& u,
                                                            const ExactRational& nu) {
  const ExactInteger num = boost::multiprecision::numerator(nu);
  const ExactInteger den = boost::multiprecision::denominator(nu);
  ExactInteger ceil_num = num / den;
  if (ceil_num * den != num && num > 0) {
    ceil_num += 1;
  }
  const auto order = ceil_num.convert_to<std::int64_t>();
  return oracle_nabla_diff_n(oracle_nabla_sum(u, ExactRational(order) - nu), order);
}

/// Rational linear problem (nabla^nu_{rho(a)} u)(t) = p(t) u(t) + q(t) u(t-1) + g(t).
/// Coefficient vectors are indexed by t - a - 1, i.e. entry 0 is t = a + 1.
struct ExactProblem {
  ExactRational nu;
  std::vector<ExactRational> p;
  std::vector<ExactRational> q;
  std::vector<ExactRational> g;
  ExactRational u0;
};

/// Exact method-of-steps solution u(a + n), n = 0..n_max.
inline std::vector<ExactRational> oracle_solve(const ExactProblem& prob, std::int64_t n_max) {
  if (n_max < 0 || n_max > max_oracle_steps) {
    throw std::invalid_argument("oracle_solve: n_max must lie in [0, " + std::to_string(max_oracle_steps) + "]");
  }
  const auto steps = static_cast<std::size_t>(n_max);
  if (prob.p.size() < steps || prob.q.size() < steps || prob.g.size() < steps) {
    throw std::invalid_argument("oracle_solve: coefficient vectors shorter than n_max");
  }
  const auto kernel = oracle_monomial_row(-prob.nu - 1, n_max + 1);
  std::vector<ExactRational> u(steps + 1);
  u[0] = prob.u0;
  for (std::size_t n = 1; n <= steps; ++n) {
    const ExactRational pivot = ExactRational(1) - prob.p[n - 1];
    if (pivot == 0) {
      throw std::domain_error("oracle_solve: 1 - p(t) = 0 at step " + std::to_string(n));
    }
    ExactRational rhs = prob.q[n - 1] * u[n - 1] + prob.g[n - 1];
    for (std::size_t k = 0; k < n; ++k) {
      rhs -= kernel[n - k + 1] * u[k];
    }
    u[n] = rhs / pivot;
  }
  return u;
}

/// Exact E_{c,nu}(a + n, a), n = 0..n_max; c indexed like ExactProblem coefficients.
inline std::vector<ExactRational> oracle_mittag_leffler(const std::vector<ExactRational>& c, const ExactRational& nu,
                                                        std::int64_t n_max) {
  if (n_max < 0 || static_cast<std::size_t>(n_max) > c.size()) {
    throw std::invalid_argument("oracle_mittag_leffler: coefficient vector shorter than n_max");
  }
  const auto kernel = oracle_monomial_row(-nu - 1, n_max + 1);
  std::vector<ExactRational> e(static_cast<std::size_t>(n_max) + 1);
  e[0] = 1;
  for (std::size_t n = 1; n <= static_cast<std::size_t>(n_max); ++n) {
    ExactRational acc = c[n - 1] * e[n - 1];
    for (std::size_t k = 0; k < n; ++k) {
      acc -= kernel[n - k + 1] * e[k];
    }
    e[n] = acc;
  }
  return e;
}

/// Exact fraction as "num/den" (or "num" for integers), for fixture dumps.
inline std::string to_string(const ExactRational& r) {
  const ExactInteger den = boost::multiprecision::denominator(r);
  if (den == 1) {
    return boost::multiprecision::numerator(r).str();
  }
  return boost::multiprecision::numerator(r).str() + "/" + den.str();
}

}  // namespace nabla_frac::exact
