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

#include "rsdelta/asymptotics.hpp"

#include <cmath>
#include <limits>

#include "rsdelta/errors.hpp"

namespace rsdelta {

QPair double_large_alpha(double alpha) {
  const double e = std::exp(-alpha);
  return {1.0 + e, 1.0 - e};
}

QPair double_small(double alpha) {
  if (alpha == 0.0) return {2.0, -std::numeric_limits<double>::infinity()};
  return {2.0 / (alpha + 1.0), 2.0 * (alpha - 1.0) / (alpha * alpha)};
}

std::optional<double> triple_even_small(double alpha, double epsilon) {
  const double den = 1.0 + alpha * (1.0 - alpha * epsilon / 2.0);
  if (den == 0.0) return std::nullopt;
  return (2.0 - epsilon * (alpha - 1.0)) / den;
}

TripleLargeAlpha triple_large_alpha(double alpha, double epsilon) {
  if (epsilon == 1.0) throw DomainError("triple_large_alpha: eps = 1 is degenerate");
  const double ground = 1.0 + (1.0 + epsilon) / (1.0 - epsilon) * std::exp(-alpha);
  // Expanding (q - 1)(q - eps) = (q + eps) e^{-q alpha} about q = eps.
  const double second = epsilon - 2.0 * epsilon / (1.0 - epsilon) * std::exp(-epsilon * alpha);
  return {ground, second};
}

int count_bound_states(double alpha, std::optional<double> epsilon) {
  if (!epsilon || *epsilon == 0.0) {
    if (alpha <= 0.0) return 0;
    return 1 + (alpha > 1.0 ? 1 : 0);
  }
  const double eps = *epsilon;
  if (alpha <= 0.0) throw DomainError("count_bound_states: triple counting needs alpha > 0");
  const int odd = alpha > 1.0 ? 1 : 0;
  const double threshold = 1.0 + 2.0 / eps;
  if (eps > 0.0) return 1 + odd + (alpha > threshold ? 1 : 0);
  // Middle barrier: the ground state needs alpha > 1 + 2/eps, which is automatic for eps > -2.
  return odd + (alpha > threshold ? 1 : 0);
}

}  // namespace rsdelta
