/*
 * Copyright 2026 The rsdelta Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Divided-difference forms of the exponential, accurate near w = 0.
//   exprel(w)  = (e^w - 1) / w
//   exprel2(w) = (e^w - 1 - w) / w^2

#include <cmath>
#include <complex>

namespace rsdelta::detail {

using Complex = std::complex<double>;

inline constexpr double kSeriesRadius = 0.5;
inline constexpr int kSeriesTerms = 24;

// sum_{n>=0} c_n w^n with c_n = 1 / (n + shift)!
inline Complex shifted_exp_series(Complex w, int shift) {
  double fact = 1.0;
  for (int i = 2; i <= shift; ++i) fact *= i;
  Complex term = 1.0 / fact;
  Complex sum = term;
  for (int n = 1; n < kSeriesTerms; ++n) {
    term *= w / static_cast<double>(n + shift);
    sum += term;
  }
  return sum;
}

// sum_{n>=1} n c_n w^{n-1} with c_n = 1 / (n + shift)!
inline Complex shifted_exp_series_derivative(Complex w, int shift) {
  double fact = 1.0;
  for (int i = 2; i <= shift + 1; ++i) fact *= i;
  Complex coeff = 1.0 / fact;  // c_1
  Complex power = 1.0;
  Complex sum = coeff;
  for (int n = 2; n < kSeriesTerms; ++n) {
    coeff /= static_cast<double>(n + shift);
    power *= w;
    sum += static_cast<double>(n) * coeff * power;
  }
  return sum;
}

inline Complex exprel(Complex w) {
  if (std::abs(w) < kSeriesRadius) return shifted_exp_series(w, 1);
  return (std::exp(w) - 1.0) / w;
}

inline Complex exprel_derivative(Complex w) {
  if (std::abs(w) < kSeriesRadius) return shifted_exp_series_derivative(w, 1);
  const Complex ew = std::exp(w);
  return (ew * w - ew + 1.0) / (w * w);
}

inline Complex exprel2(Complex w) {
  if (std::abs(w) < kSeriesRadius) return shifted_exp_series(w, 2);
  return (std::exp(w) - 1.0 - w) / (w * w);
}

inline Complex exprel2_derivative(Complex w) {
  if (std::abs(w) < kSeriesRadius) return shifted_exp_series_derivative(w, 2);
  return (std::exp(w) - 1.0) / (w * w) - 2.0 * exprel2(w) / w;
}

}  // namespace rsdelta::detail
