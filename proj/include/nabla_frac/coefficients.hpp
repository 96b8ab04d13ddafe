#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nabla_frac {

/// A coefficient or forcing sequence t -> c(t): either a constant, or tabulated
/// values on [first, first + size - 1].
class Coefficients {
 public:
  Coefficients() = default;

  static Coefficients constant(double value) {
    if (!std::isfinite(value)) {
      throw std::invalid_argument("coefficient constant must be finite");
    }
    Coefficients c;
    c.constant_ = value;
    return c;
  }

  static Coefficients sequence(std::int64_t first, std::vector<double> values) {
    for (double v : values) {
      if (!std::isfinite(v)) {
        throw std::invalid_argument("coefficient sequence contains a non-finite value");
      }
    }
    Coefficients c;
    c.tabulated_ = true;
    c.first_ = first;
    c.values_ = std::move(values);
    return c;
  }

  bool is_constant() const noexcept { return !tabulated_; }
  double constant_value() const noexcept { return constant_; }
  std::int64_t first() const noexcept { return first_; }
  const std::vector<double>& values() const noexcept { return values_; }

  bool covers(std::int64_t from, std::int64_t to) const noexcept {
    if (!tabulated_) {
      return true;
    }
    return from >= first_ && to < first_ + static_cast<std::int64_t>(values_.size());
  }

  double operator()(std::int64_t t) const {
    if (!tabulated_) {
      return constant_;
    }
    if (t < first_ || t >= first_ + static_cast<std::int64_t>(values_.size())) {
      throw std::out_of_range("coefficient sequence has no value at t = " + std::to_string(t));
    }
    return values_[static_cast<std::size_t>(t - first_)];
  }

 private:
  bool tabulated_ = false;
  double constant_ = 0.0;
  std::int64_t first_ = 0;
  std::vector<double> values_;
};

}  // namespace nabla_frac
