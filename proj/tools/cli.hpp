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
#include <string_view>
#include <vector>

#include "fockoptics/fock.hpp"

namespace fockoptics::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kValidationFailure = 2,
};

struct CommandResult {
  int exit_code = kSuccess;
  /// JSON document (empty when --output redirected it, or on failure).
  std::string out;
  /// Diagnostics and usage text.
  std::string err;
};

/// Runs one command line. args[0] is the program name.
CommandResult dispatch(const std::vector<std::string>& args);

/// Parses "1", "-0.5", "2j", "0.3-1.5e-3j", "+j". Throws std::invalid_argument.
Amplitude parse_complex(std::string_view text);
/// Comma-separated list of parse_complex values.
std::vector<Amplitude> parse_complex_list(std::string_view text);
/// The "re+imj" form with 17 significant digits; parse_complex reads it back exactly.
std::string format_complex(Amplitude z);

}  // namespace fockoptics::cli
