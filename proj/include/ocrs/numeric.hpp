// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OCRS_NUMERIC_HPP
#define OCRS_NUMERIC_HPP

#include <cmath>

namespace ocrs {

// Absolute tolerance for closed-form identities; sampled quantities use
// statistically derived tolerances instead.
inline constexpr double kIdentityTolerance = 1e-12;

inline double inv_e() { return std::exp(-1.0); }
inline double one_minus_inv_e() { return -std::expm1(-1.0); }

// Neumaier's compensated summation; keeps long enumeration sums well under
// kIdentityTolerance.
class NeumaierSum {
 public:
  void add(double v) {
    double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace ocrs

#endif  // OCRS_NUMERIC_HPP
