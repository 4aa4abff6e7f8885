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

// Two-mode (beam splitter) algebra: Schwinger realization of su(2), the
// (l, l3) multiplet labels of two-mode number states, and the SO(3) image of
// a beam-splitter matrix.

#pragma once

#include <array>

#include <Eigen/Dense>

#include "fockoptics/basis.hpp"
#include "fockoptics/fock.hpp"
#include "fockoptics/half_integer.hpp"
#include "fockoptics/lift.hpp"

namespace fockoptics {

/// |n, m> = |l, l3> with 2l = n + m and 2 l3 = n - m.
struct MultipletLabel2 {
  HalfInteger l;
  HalfInteger l3;

  /// Throws std::invalid_argument unless |l3| <= l, l >= 0 and l - l3 is an integer.
  static MultipletLabel2 make(HalfInteger l, HalfInteger l3);

  bool operator==(const MultipletLabel2&) const = default;
};

/// Throws std::invalid_argument unless occ has exactly two modes.
MultipletLabel2 multiplet_label(const Occupation& occ);

/// l (l + 1). Throws std::invalid_argument for negative l.
Rational casimir_eigenvalue(HalfInteger l);

/// sigma_1, sigma_2, sigma_3.
const std::array<Eigen::Matrix2cd, 3>& pauli_matrices();

/// L_k = 1/2 (a1^dagger, a2^dagger) sigma_k (a1, a2)^T and the ladder pair
/// L+ = a1^dagger a2, L- = a2^dagger a1 as matrices on FockBasis::up_to(2, N).
struct Su2GeneratorSet {
  FockBasis basis;
  std::array<Eigen::MatrixXcd, 3> generators;
  Eigen::MatrixXcd raise;
  Eigen::MatrixXcd lower;
};

/// Throws std::invalid_argument for max_total_photons < 1.
Su2GeneratorSet schwinger_generators(int max_total_photons);

/// O_kl = 1/2 Tr(U^dagger sigma_k U sigma_l), so that the output-mode
/// generators satisfy K_k = sum_l O_kl L_l. Insensitive to a global phase of U.
Eigen::Matrix3d su2_adjoint(const ModeUnitary& u);

}  // namespace fockoptics
