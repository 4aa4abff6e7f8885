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

#include <cstddef>

#include <Eigen/Dense>

namespace fockoptics::detail {

// Ad(U)_ij = 1/2 Re Tr(U^dagger g_i U g_j) for generators normalized as
// Tr(g_i g_j) = 2 delta_ij. The imaginary part vanishes for Hermitian g.
template <int N, typename Generators>
Eigen::Matrix<double, N, N> adjoint_from_trace(const Eigen::MatrixXcd& u, const Generators& g) {
  Eigen::Matrix<double, N, N> out;
  const Eigen::MatrixXcd u_dag = u.adjoint();
  for (int i = 0; i < N; ++i) {
    const Eigen::MatrixXcd conjugated = u_dag * g[static_cast<std::size_t>(i)] * u;
    for (int j = 0; j < N; ++j) {
      out(i, j) = 0.5 * (conjugated * g[static_cast<std::size_t>(j)]).trace().real();
    }
  }
  return out;
}

}  // namespace fockoptics::detail
