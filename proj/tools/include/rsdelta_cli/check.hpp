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

#include <string>
#include <string_view>
#include <vector>

#include "rsdelta/types.hpp"

namespace rsdelta::cli {

enum class Fault { None, WrongResidueSign, AdmitZeroRoot };
Fault parse_fault(std::string_view name);  // throws DomainError on unknown names

struct CheckConfig {
  Structure structure = Structure::Double;
  DimensionlessParams params{3.0, 0.0, 0.0};
  double re_max = 40.0;
  Fault fault = Fault::None;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the invariant suite. A check that throws is reported as failed with the message.
std::vector<CheckResult> run_checks(const CheckConfig& config);

}  // namespace rsdelta::cli
