#pragma once

#include <cmath>

#ifdef __FAST_MATH__
#error fast math enabled, this would negate compensation.
#endif

namespace casimir {

/// Neumaier's variant of Kahan summation: the compensation also survives
/// addends larger in magnitude than the running sum.
class CompensatedSum {
 public:
  CompensatedSum& operator+=(double value) noexcept {
    const double t = sum_ + value;
    if (std::fabs(sum_) >= std::fabs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  double value() const noexcept { return sum_ + compensation_; }
  double high() const noexcept { return sum_; }
  double low() const noexcept { return compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace casimir
