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

// JSON forms of states and mode matrices:
//   state:  {"modes": m, "terms": [{"occ": [n1, ...], "re": x, "im": y}, ...]}
//   matrix: {"dim": m, "rows": [[{"re": x, "im": y}, ...], ...]}
// Terms are written in lexicographic order of "occ".

#pragma once

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "fockoptics/fock.hpp"
#include "fockoptics/lift.hpp"

namespace fockoptics {

/// Malformed JSON input. The message names the offending field.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json complex_to_json(Amplitude z);
Amplitude complex_from_json(const nlohmann::json& j, const std::string& field);

nlohmann::json state_to_json(const PureState& state);
PureState state_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const ModeUnitary& u);
/// Throws FormatError for bad structure and ValidationError for a
/// non-unitary matrix.
ModeUnitary matrix_from_json(const nlohmann::json& j);

}  // namespace fockoptics
