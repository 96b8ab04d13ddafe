#pragma once

// Nabla fractional Taylor monomials H_mu(t, a) = Gamma(t - a + mu) / (Gamma(t - a) Gamma(mu + 1)).
//
// Values are produced by the multiplicative recurrence in the offset n = t - a,
//   h(0) = 0,  h(1) = 1,  h(k + 1) = h(k) (k + mu) / k,
// which never touches the gamma function and so has no poles or overflow for
// large n. The recurrence runs in a wider type than the result.

#include <cmath>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace nabla_frac {

/// Order/offset pair identifying H_mu(a + n, a).
struct MonomialParams {
  double mu = 0.0;
  std::int64_t n = 0;
};

/// Working precision for the recurrences and the convolution inner sums.
using wide_real = long double;

inline bool is_negative_integer(double mu) {
  return mu < 0.0 && std::floor(mu) == mu;
}

namespace detail {

inline void require_finite_order(double mu, const char* what) {
  if (!std::isfinite(mu)) {
    throw std::invalid_argument(std::string(what) + " must be finite");
  }
}

inline void require_offset(std::int64_t n) {
  if (n < 0) {
    throw std::invalid_argument("monomial offset n must be >= 0, got " + std::to_string(n));
  }
}

}  // namespace detail

/// Offsets 0..n_max of H_mu in precision Real. Index k holds H_mu(a + k, a).
template <std::floating_point Real>
std::vector<Real> monomial_row(double mu, std::int64_t n_max) {
  detail::require_finite_order(mu, "monomial order mu");
  detail::require_offset(n_max);
  std::vector<Real> row(static_cast<std::size_t>(n_max) + 1, Real{0});
  if (n_max == 0 || is_negative_integer(mu)) {
    return row;
  }
  const Real m = static_cast<Real>(mu);
  Real h = 1;
  row[1] = h;
  for (std::int64_t k = 1; k < n_max; ++k) {
    const Real kk = static_cast<Real>(k);
    h = h * (kk + m) / kk;
    row[static_cast<std::size_t>(k) + 1] = h;
  }
  return row;
}

/// H_mu(a + n, a). Zero at n = 0 and for negative integer mu.
inline double monomial_value(const MonomialParams& p) {
  detail::require_finite_order(p.mu, "monomial order mu");
  detail::require_offset(p.n);
  if (p.n == 0 || is_negative_integer(p.mu)) {
    return 0.0;
  }
  const wide_real m = p.mu;
  wide_real h = 1;
  for (std::int64_t k = 1; k < p.n; ++k) {
    const wide_real kk = static_cast<wide_real>(k);
    h = h * (kk + m) / kk;
  }
  return static_cast<double>(h);
}

/// H_mu(t, a) for t in N_a; depends only on t - a.
inline double monomial_value(double mu, std::int64_t t, std::int64_t a) {
  if (t < a) {
    throw std::invalid_argument("monomial requires t >= a");
  }
  return monomial_value(MonomialParams{mu, t - a});
}

/// Kernel H_{-nu-1}(t, rho(s)) of the Riemann-Liouville difference, with lag = t - rho(s) = t - s + 1.
inline double convolution_weight(double nu, std::int64_t lag) {
  detail::require_finite_order(nu, "order nu");
  if (lag < 1) {
    throw std::invalid_argument("convolution lag must be >= 1, got " + std::to_string(lag));
  }
  return monomial_value(MonomialParams{-nu - 1.0, lag});
}

/// Kernel weights indexed by lag, entries 0..max_lag; entry 0 is unused and zero.
template <std::floating_point Real>
std::vector<Real> convolution_weights(double nu, std::int64_t max_lag) {
  return monomial_row<Real>(-nu - 1.0, max_lag);
}

/// (H_{mu-1}(a + n, a)) for n = 1..n_max, the decaying tail for 0 < mu < 1.
inline std::vector<double> monomial_tail(double mu, std::int64_t n_max) {
  detail::require_finite_order(mu, "tail order mu");
  if (!(mu > 0.0 && mu < 1.0)) {
    throw std::invalid_argument("monomial_tail requires 0 < mu < 1");
  }
  if (n_max < 1) {
    throw std::invalid_argument("monomial_tail requires n_max >= 1");
  }
  const auto row = monomial_row<wide_real>(mu - 1.0, n_max);
  return std::vector<double>(row.begin() + 1, row.end());
}

}  // namespace nabla_frac
