#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "nabla_frac/exact_oracle.hpp"

namespace nabla_frac::testing {

inline std::vector<double> uniform_values(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) {
    x = dist(rng);
  }
  return v;
}

inline double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) {
    m = std::max(m, std::abs(x));
  }
  return m;
}

/// max_k |x_k - y_k| / max_k |y_k|; 0 when both vanish.
inline double normwise_rel_error(std::span<const double> x, std::span<const double> y) {
  double diff = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    diff = std::max(diff, std::abs(x[k] - y[k]));
  }
  const double scale = max_abs(y);
  return scale == 0.0 ? diff : diff / scale;
}

inline double rel_error(double x, double y) {
  const double scale = std::max(std::abs(x), std::abs(y));
  return scale == 0.0 ? 0.0 : std::abs(x - y) / scale;
}

inline std::vector<double> to_doubles(const std::vector<exact::ExactRational>& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& r : v) {
    out.push_back(exact::to_double(r));
  }
  return out;
}

/// Uniform rational num/den with num drawn from [lo_num, hi_num].
inline exact::ExactRational random_rational(std::mt19937_64& rng, std::int64_t lo_num, std::int64_t hi_num,
                                            std::int64_t den) {
  std::uniform_int_distribution<std::int64_t> dist(lo_num, hi_num);
  return exact::rational(dist(rng), den);
}

}  // namespace nabla_frac::testing
