// Copyright 2026 The fockoptics Authors
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

#pragma once

#include <string>
#include <vector>

namespace fockoptics {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs the library's invariant checks (lift unitarity and homomorphism,
/// su(2)/su(3) commutators, Casimir values, adjoint maps, ladder geometry,
/// scissors completeness and the balanced 1/9 point) on fixed seeds.
std::vector<CheckResult> run_selfcheck();

}  // namespace fockoptics
