#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nabla_frac {

/// A real sequence on the integer window [base, base + size - 1] of N_base.
///
/// Immutable after construction. Reading outside the window throws; nothing is
/// ever zero-filled implicitly.
class GridFunction {
 public:
  GridFunction(std::int64_t base, std::vector<double> values)
      : base_(base), values_(std::move(values)) {
    if (values_.empty()) {
      throw std::invalid_argument("grid function needs at least one value");
    }
    for (std::size_t k = 0; k < values_.size(); ++k) {
      if (!std::isfinite(values_[k])) {
        throw std::invalid_argument("grid function value at index " +
                                    std::to_string(base_ + static_cast<std::int64_t>(k)) +
                                    " is not finite");
      }
    }
  }

  std::int64_t base() const noexcept { return base_; }
  std::int64_t last() const noexcept { return base_ + static_cast<std::int64_t>(values_.size()) - 1; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }

  bool contains(std::int64_t t) const noexcept { return t >= base_ && t <= last(); }

  double operator()(std::int64_t t) const {
    if (!contains(t)) {
      throw std::out_of_range("grid point " + std::to_string(t) + " outside [" +
                              std::to_string(base_) + ", " + std::to_string(last()) + "]");
    }
    return values_[static_cast<std::size_t>(t - base_)];
  }

  friend bool operator==(const GridFunction&, const GridFunction&) = default;

 private:
  std::int64_t base_;
  std::vector<double> values_;
};

/// Output of an operator: values on N_base, base being the first point where the
/// operator is defined.
struct OperatorResult {
  std::int64_t base = 0;
  std::vector<double> values;

  std::int64_t last() const noexcept { return base + static_cast<std::int64_t>(values.size()) - 1; }
  bool contains(std::int64_t t) const noexcept { return t >= base && t <= last(); }

  double at(std::int64_t t) const {
    if (!contains(t)) {
      throw std::out_of_range("operator result has no value at " + std::to_string(t));
    }
    return values[static_cast<std::size_t>(t - base)];
  }

  GridFunction to_grid_function() const { return GridFunction(base, values); }
};

}  // namespace nabla_frac
