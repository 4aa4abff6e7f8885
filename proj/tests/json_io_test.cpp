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

#include <functional>
#include <random>

#include <gtest/gtest.h>

#include "fockoptics/errors.hpp"

namespace fockoptics {
namespace {

using nlohmann::json;
using cd = std::complex<double>;

std::string format_error(const std::function<void()>& f) {
  try {
    f();
  } catch (const FormatError& e) {
    return e.what();
  }
  return "<no error>";
}

TEST(JsonComplex, RoundTripIsBitExact) {
  std::mt19937_64 rng(61);
  std::normal_distribution<double> normal;
  for (int i = 0; i < 100; ++i) {
    const cd z(normal(rng), normal(rng));
    const cd back = complex_from_json(json::parse(complex_to_json(z).dump()), "z");
    EXPECT_EQ(back, z);
  }
}

TEST(JsonState, RoundTrip) {
  const PureState s(3, {{Occupation{1, 0, 2}, cd(0.6, -0.1)}, {Occupation{0, 0, 0}, cd(0.0, 0.3)}});
  const json j = state_to_json(s);
  EXPECT_EQ(j["modes"], 3);
  ASSERT_EQ(j["terms"].size(), 2u);
  EXPECT_EQ(j["terms"][0]["occ"], json::array({0, 0, 0}));  // lexicographic
  EXPECT_EQ(state_from_json(json::parse(j.dump())).terms(), s.terms());
}

TEST(JsonState, ErrorsNameTheField) {
  EXPECT_EQ(format_error([] { state_from_json(json::parse(R"({"terms": []})")); }), "state.modes: missing");
  EXPECT_NE(format_error([] {
              state_from_json(json::parse(R"({"modes": 2, "terms": [{"occ": [1], "re": 1, "im": 0}]})"));
            }).find("state.terms[0].occ"),
            std::string::npos);
  EXPECT_NE(format_error([] {
              state_from_json(json::parse(R"({"modes": 1, "terms": [{"occ": [-1], "re": 1, "im": 0}]})"));
            }).find("non-negative"),
            std::string::npos);
  EXPECT_NE(format_error([] {
              state_from_json(json::parse(
                  R"({"modes": 1, "terms": [{"occ": [1], "re": 1, "im": 0}, {"occ": [1], "re": 0, "im": 0}]})"));
            }).find("duplicate"),
            std::string::npos);
  EXPECT_NE(format_error([] {
              state_from_json(json::parse(R"({"modes": 1, "terms": [{"occ": [1], "re": "x", "im": 0}]})"));
            }).find("expected a number"),
            std::string::npos);
}

TEST(JsonMatrix, RoundTrip) {
  std::mt19937_64 rng(62);
  const ModeUnitary u = random_unitary(3, rng);
  const ModeUnitary back = matrix_from_json(json::parse(matrix_to_json(u).dump()));
  EXPECT_TRUE(back.matrix() == u.matrix());
}

TEST(JsonMatrix, Errors) {
  EXPECT_EQ(format_error([] { matrix_from_json(json::parse(R"({"dim": 4, "rows": []})")); }),
            "matrix.dim: must be 2 or 3");
  EXPECT_EQ(format_error([] {
              matrix_from_json(json::parse(R"({"dim": 2, "rows": [[{"re": 1}, {"re": 0, "im": 0}],
                                                                 [{"re": 0, "im": 0}, {"re": 1, "im": 0}]]})"));
            }),
            "matrix.rows[0][0].im: missing");
  EXPECT_THROW(matrix_from_json(json::parse(R"({"dim": 2, "rows": [[{"re": 1, "im": 0}, {"re": 1, "im": 0}],
                                                                  [{"re": 0, "im": 0}, {"re": 1, "im": 0}]]})")),
               ValidationError);
}

}  // namespace
}  // namespace fockoptics
