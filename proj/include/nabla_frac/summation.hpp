#pragma once

#include <cmath>
#include <concepts>

namespace nabla_frac {

/// Neumaier-compensated running sum.
template <std::floating_point Real>
class CompensatedSum {
 public:
  constexpr CompensatedSum() = default;
  constexpr explicit CompensatedSum(Real initial) : sum_(initial) {}

  constexpr CompensatedSum& operator+=(Real x) {
    const Real t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  constexpr Real value() const { return sum_ + comp_; }

 private:
  Real sum_{0};
  Real comp_{0};
};

}  // namespace nabla_frac
