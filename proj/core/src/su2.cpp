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

#include "fockoptics/su2.hpp"

#include <cstdlib>
#include <stdexcept>

#include "adjoint.hpp"

namespace fockoptics {

MultipletLabel2 MultipletLabel2::make(HalfInteger l, HalfInteger l3) {
  if (l.twice() < 0) throw std::invalid_argument("multiplet index l must be non-negative");
  if (std::abs(l3.twice()) > l.twice()) throw std::invalid_argument("|l3| exceeds l");
  if ((l.twice() - l3.twice()) % 2 != 0) throw std::invalid_argument("l - l3 must be an integer");
  return MultipletLabel2{l, l3};
}

MultipletLabel2 multiplet_label(const Occupation& occ) {
  if (occ.modes() != 2) throw std::invalid_argument("su(2) labels need a two-mode occupation");
  return MultipletLabel2::make(HalfInteger::from_twice(occ[0] + occ[1]),
                               HalfInteger::from_twice(occ[0] - occ[1]));
}

Rational casimir_eigenvalue(HalfInteger l) {
  if (l.twice() < 0) throw std::invalid_argument("negative multiplet index");
  // l (l + 1) = (2l)(2l + 2) / 4.
  return Rational(l.twice() * (l.twice() + 2), 4);
}

const std::array<Eigen::Matrix2cd, 3>& pauli_matrices() {
  static const std::array<Eigen::Matrix2cd, 3> sigma = [] {
    const Amplitude i(0.0, 1.0);
    std::array<Eigen::Matrix2cd, 3> s;
    s[0] << 0, 1, 1, 0;
    s[1] << 0, -i, i, 0;
    s[2] << 1, 0, 0, -1;
    return s;
  }();
  return sigma;
}

Su2GeneratorSet schwinger_generators(int max_total_photons) {
  if (max_total_photons < 1) throw std::invalid_argument("schwinger_generators needs a cutoff >= 1");
  FockBasis basis = FockBasis::up_to(2, max_total_photons);

  std::array<Eigen::MatrixXcd, 3> l;
  for (std::size_t k = 0; k < 3; ++k) {
    l[k] = bilinear_matrix(basis, 0.5 * Eigen::MatrixXcd(pauli_matrices()[k]));
  }
  Eigen::MatrixXcd a1dag_a2 = Eigen::MatrixXcd::Zero(2, 2);
  a1dag_a2(0, 1) = 1.0;
  Eigen::MatrixXcd raise = bilinear_matrix(basis, a1dag_a2);
  Eigen::MatrixXcd lower = bilinear_matrix(basis, Eigen::MatrixXcd(a1dag_a2.transpose()));

  return Su2GeneratorSet{std::move(basis), std::move(l), std::move(raise), std::move(lower)};
}

Eigen::Matrix3d su2_adjoint(const ModeUnitary& u) {
  if (u.dim() != 2) throw std::invalid_argument("su2_adjoint needs a 2x2 unitary");
  return detail::adjoint_from_trace<3>(u.matrix(), pauli_matrices());
}

}  // namespace fockoptics
