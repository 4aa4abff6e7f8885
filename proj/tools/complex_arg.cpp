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

#include <charconv>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "cli.hpp"

namespace fockoptics::cli {

namespace {

double parse_real(std::string_view text, std::string_view whole) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw std::invalid_argument("malformed complex number '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Amplitude parse_complex(std::string_view text) {
  const std::string_view whole = text;
  if (text.empty()) throw std::invalid_argument("empty complex number");
  if (text.back() != 'j') return {parse_real(text, whole), 0.0};

  text.remove_suffix(1);
  // Split at the last sign that is neither leading nor an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = text.size(); i-- > 1;) {
    if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  const std::string_view re = split == std::string_view::npos ? std::string_view{} : text.substr(0, split);
  std::string_view im = split == std::string_view::npos ? text : text.substr(split);
  double im_value = 0.0;
  if (im.empty() || im == "+") {
    im_value = 1.0;
  } else if (im == "-") {
    im_value = -1.0;
  } else {
    im_value = parse_real(im, whole);
  }
  return {re.empty() ? 0.0 : parse_real(re, whole), im_value};
}

std::vector<Amplitude> parse_complex_list(std::string_view text) {
  std::vector<Amplitude> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_complex(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::string format_complex(Amplitude z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gj", z.real(), z.imag());
  return buf;
}

}  // namespace fockoptics::cli
