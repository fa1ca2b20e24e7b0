#pragma once

#include <cmath>

namespace fraclog {

// Neumaier's variant of Kahan summation: unlike plain Kahan it stays correct
// when the incoming term is larger in magnitude than the running sum, which is
// the normal situation in alternating series before the terms start to decay.
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(double init) : sum_(init) {}

  CompensatedSum& operator+=(double x) noexcept {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace fraclog
