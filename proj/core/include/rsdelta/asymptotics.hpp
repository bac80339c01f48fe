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

#include <optional>

namespace rsdelta {

/// Approximate reduced wavenumbers q = 2*kappa/gamma of the even and odd bound states.
struct QPair {
  double even;
  double odd;
};

/// Widely separated wells: q = 1 +- e^{-alpha}.
QPair double_large_alpha(double alpha);

/// Weakly bound regime |q alpha| << 1: q_even = 2/(alpha + 1), q_odd = 2(alpha - 1)/alpha^2.
QPair double_small(double alpha);

/// Even-state small-q approximation of the symmetric triple,
/// q = (2 - eps(alpha - 1)) / (1 + alpha(1 - alpha eps / 2)).
/// Returns nullopt where the denominator vanishes.
std::optional<double> triple_even_small(double alpha, double epsilon);

struct TripleLargeAlpha {
  double ground;
  double second_excited;
};

/// Large-alpha ground and second excited even states of the symmetric triple.
/// Throws DomainError for eps = 1, where both levels are degenerate at q = 1.
TripleLargeAlpha triple_large_alpha(double alpha, double epsilon);

/// Predicted number of bound states. epsilon = nullopt selects the double structure.
int count_bound_states(double alpha, std::optional<double> epsilon = std::nullopt);

}  // namespace rsdelta
