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

// Three-mode (tritter) algebra: Gell-Mann matrices, the bosonic realization
// of su(3) with its T/U/V ladder operators, (T3, Y) labels, the Euler-angle
// parameterization of SU(3) and its 8x8 adjoint image.
//
// Gell-Mann matrices and generator arrays are indexed from zero: element k
// holds lambda_{k+1} (resp. F_{k+1}).

#pragma once

#include <array>
#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "fockoptics/basis.hpp"
#include "fockoptics/fock.hpp"
#include "fockoptics/half_integer.hpp"
#include "fockoptics/lift.hpp"

namespace fockoptics {

const std::array<Eigen::Matrix3cd, 8>& gell_mann();

/// lambda_k = sqrt(scale_squared) * entries, with Gaussian-integer entries.
/// Lets identities such as Tr(lambda_a lambda_b) = 2 delta_ab be checked
/// without rounding.
struct ExactGellMann {
  std::array<std::array<std::complex<int>, 3>, 3> entries;
  Rational scale_squared;
};
const std::array<ExactGellMann, 8>& gell_mann_exact();

/// f[a][b][c] with [lambda_a, lambda_b] = 2i sum_c f_abc lambda_c, obtained
/// from f_abc = Tr([lambda_a, lambda_b] lambda_c) / (4i).
using StructureConstants = std::array<std::array<std::array<double, 8>, 8>, 8>;
const StructureConstants& su3_structure_constants();

struct MultipletLabel3 {
  HalfInteger t3;
  Rational y;
  /// (lambda, mu); always (n, 0) for bosonic states.
  std::pair<int, int> multiplet;

  bool operator==(const MultipletLabel3&) const = default;
};

/// t3 = (n - l)/2, y = (n + l - 2m)/3 for |n, l, m>. Throws
/// std::invalid_argument unless occ has three modes.
MultipletLabel3 t3_y_label(const Occupation& occ);

/// Every three-mode occupation with n photons, sorted by y descending then t3
/// ascending (top to bottom, left to right on the T3-Y plane).
std::vector<std::pair<Occupation, MultipletLabel3>> enumerate_multiplet(int n);

/// F_i = 1/2 a^dagger lambda_i a and the derived operators
/// T+- = F1 +- iF2, U+- = F6 +- iF7, V+- = F4 +- iF5, T3 = F3, Y = 2/sqrt(3) F8.
struct Su3GeneratorSet {
  FockBasis basis;
  std::array<Eigen::MatrixXcd, 8> generators;
  Eigen::MatrixXcd t_plus, t_minus;
  Eigen::MatrixXcd u_plus, u_minus;
  Eigen::MatrixXcd v_plus, v_minus;
  Eigen::MatrixXcd t3, y;
};

/// Throws std::invalid_argument for max_total_photons < 1.
Su3GeneratorSet su3_generators(int max_total_photons);

struct EulerAngles {
  double alpha = 0, beta = 0, gamma = 0, theta = 0;
  double a = 0, b = 0, c = 0, phi = 0;
};

/// exp(i l3 alpha) exp(i l2 beta) exp(i l3 gamma) exp(i l5 theta)
/// exp(i l3 a) exp(i l2 b) exp(i l3 c) exp(i l8 phi), each factor in closed form.
ModeUnitary su3_euler(const EulerAngles& angles);

/// R_ij = 1/2 Tr(U^dagger lambda_i U lambda_j), so that the output-mode
/// generators satisfy G_i = sum_j R_ij F_j.
Eigen::Matrix<double, 8, 8> su3_adjoint(const ModeUnitary& u);

}  // namespace fockoptics
