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

#include <stdexcept>

namespace rsdelta {

/// Invalid parameter (zero strength, non-positive width, out-of-range b/a, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A function was evaluated exactly at one of its declared poles.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A caller-side precondition was violated, e.g. a wavenumber that is not a root.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The Siegert normalization integral vanished.
class DegenerateNormalization : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internal inconsistency of the solver output (e.g. a mirror partner that cannot be recovered).
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rsdelta
