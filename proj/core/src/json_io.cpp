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

#include "fockoptics/json_io.hpp"

#include "fockoptics/errors.hpp"

namespace fockoptics {

namespace {

using nlohmann::json;

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw FormatError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(where + "." + key + ": missing");
  return *it;
}

double require_number(const json& j, const char* key, const std::string& where) {
  const json& v = require(j, key, where);
  if (!v.is_number()) throw FormatError(where + "." + key + ": expected a number");
  return v.get<double>();
}

std::int64_t require_integer(const json& j, const char* key, const std::string& where) {
  const json& v = require(j, key, where);
  if (!v.is_number_integer()) throw FormatError(where + "." + key + ": expected an integer");
  return v.get<std::int64_t>();
}

}  // namespace

json complex_to_json(Amplitude z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

Amplitude complex_from_json(const json& j, const std::string& field) {
  return {require_number(j, "re", field), require_number(j, "im", field)};
}

json state_to_json(const PureState& state) {
  json terms = json::array();
  for (const auto& [occ, amp] : state.terms()) {
    terms.push_back(json{{"occ", std::vector<int>(occ.counts().begin(), occ.counts().end())},
                         {"re", amp.real()},
                         {"im", amp.imag()}});
  }
  return json{{"modes", state.modes()}, {"terms", std::move(terms)}};
}

PureState state_from_json(const json& j) {
  const std::int64_t modes = require_integer(j, "modes", "state");
  if (modes < 1) throw FormatError("state.modes: must be at least 1");
  const json& terms = require(j, "terms", "state");
  if (!terms.is_array()) throw FormatError("state.terms: expected an array");

  PureState::Terms out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string where = "state.terms[" + std::to_string(i) + "]";
    const json& occ = require(terms[i], "occ", where);
    if (!occ.is_array() || occ.size() != static_cast<std::size_t>(modes)) {
      throw FormatError(where + ".occ: expected an array of " + std::to_string(modes) + " counts");
    }
    std::vector<int> counts;
    for (const json& c : occ) {
      if (!c.is_number_integer() || c.get<std::int64_t>() < 0) {
        throw FormatError(where + ".occ: counts must be non-negative integers");
      }
      counts.push_back(c.get<int>());
    }
    const Amplitude amp(require_number(terms[i], "re", where), require_number(terms[i], "im", where));
    if (!out.emplace(Occupation(std::move(counts)), amp).second) {
      throw FormatError(where + ".occ: duplicate occupation");
    }
  }
  return PureState(static_cast<std::size_t>(modes), std::move(out));
}

json matrix_to_json(const ModeUnitary& u) {
  json rows = json::array();
  for (std::size_t r = 0; r < u.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < u.dim(); ++c) row.push_back(complex_to_json(u(r, c)));
    rows.push_back(std::move(row));
  }
  return json{{"dim", u.dim()}, {"rows", std::move(rows)}};
}

ModeUnitary matrix_from_json(const json& j) {
  const std::int64_t dim = require_integer(j, "dim", "matrix");
  if (dim != 2 && dim != 3) throw FormatError("matrix.dim: must be 2 or 3");
  const json& rows = require(j, "rows", "matrix");
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(dim)) {
    throw FormatError("matrix.rows: expected " + std::to_string(dim) + " rows");
  }
  Eigen::MatrixXcd m(dim, dim);
  for (std::int64_t r = 0; r < dim; ++r) {
    const json& row = rows[static_cast<std::size_t>(r)];
    const std::string where = "matrix.rows[" + std::to_string(r) + "]";
    if (!row.is_array() || row.size() != static_cast<std::size_t>(dim)) {
      throw FormatError(where + ": expected " + std::to_string(dim) + " entries");
    }
    for (std::int64_t c = 0; c < dim; ++c) {
      m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)],
                                  where + "[" + std::to_string(c) + "]");
    }
  }
  return ModeUnitary(m);
}

}  // namespace fockoptics
