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

#include "fockoptics/su3.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "adjoint.hpp"

namespace fockoptics {

namespace {

using ExactEntries = std::array<std::array<std::complex<int>, 3>, 3>;

Eigen::Matrix3cd to_matrix(const ExactGellMann& g) {
  const double scale = std::sqrt(to_double(g.scale_squared));
  Eigen::Matrix3cd m;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      const auto e = g.entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      m(r, c) = Amplitude(scale * e.real(), scale * e.imag());
    }
  }
  return m;
}

Eigen::Matrix3cd diagonal_phases(double p0, double p1, double p2) {
  Eigen::Matrix3cd m = Eigen::Matrix3cd::Zero();
  m(0, 0) = std::polar(1.0, p0);
  m(1, 1) = std::polar(1.0, p1);
  m(2, 2) = std::polar(1.0, p2);
  return m;
}

// exp(i x lambda_3)
Eigen::Matrix3cd exp_lambda3(double x) { return diagonal_phases(x, -x, 0.0); }

// exp(i x lambda_8)
Eigen::Matrix3cd exp_lambda8(double x) {
  const double s = x / std::sqrt(3.0);
  return diagonal_phases(s, s, -2.0 * s);
}

// exp(i x lambda) for lambda = -i E_pq + i E_qp (lambda_2: p,q = 0,1; lambda_5: 0,2).
// i lambda is the real rotation generator E_pq - E_qp.
Eigen::Matrix3cd exp_rotation(double x, int p, int q) {
  Eigen::Matrix3cd m = Eigen::Matrix3cd::Identity();
  m(p, p) = std::cos(x);
  m(q, q) = std::cos(x);
  m(p, q) = std::sin(x);
  m(q, p) = -std::sin(x);
  return m;
}

}  // namespace

const std::array<ExactGellMann, 8>& gell_mann_exact() {
  static const std::array<ExactGellMann, 8> table = [] {
    const std::complex<int> i(0, 1);
    std::array<ExactGellMann, 8> g{};
    for (auto& x : g) x.scale_squared = Rational(1);
    auto& e = g;
    e[0].entries[0][1] = 1;
    e[0].entries[1][0] = 1;
    e[1].entries[0][1] = -i;
    e[1].entries[1][0] = i;
    e[2].entries[0][0] = 1;
    e[2].entries[1][1] = -1;
    e[3].entries[0][2] = 1;
    e[3].entries[2][0] = 1;
    e[4].entries[0][2] = -i;
    e[4].entries[2][0] = i;
    e[5].entries[1][2] = 1;
    e[5].entries[2][1] = 1;
    e[6].entries[1][2] = -i;
    e[6].entries[2][1] = i;
    e[7].entries[0][0] = 1;
    e[7].entries[1][1] = 1;
    e[7].entries[2][2] = -2;
    e[7].scale_squared = Rational(1, 3);
    return g;
  }();
  return table;
}

const std::array<Eigen::Matrix3cd, 8>& gell_mann() {
  static const std::array<Eigen::Matrix3cd, 8> lambda = [] {
    std::array<Eigen::Matrix3cd, 8> out;
    for (std::size_t k = 0; k < 8; ++k) out[k] = to_matrix(gell_mann_exact()[k]);
    return out;
  }();
  return lambda;
}

const StructureConstants& su3_structure_constants() {
  static const StructureConstants f = [] {
    StructureConstants out{};
    const auto& lambda = gell_mann();
    const Amplitude four_i(0.0, 4.0);
    for (std::size_t a = 0; a < 8; ++a) {
      for (std::size_t b = 0; b < 8; ++b) {
        const Eigen::Matrix3cd comm = lambda[a] * lambda[b] - lambda[b] * lambda[a];
        for (std::size_t c = 0; c < 8; ++c) {
          out[a][b][c] = ((comm * lambda[c]).trace() / four_i).real();
        }
      }
    }
    return out;
  }();
  return f;
}

MultipletLabel3 t3_y_label(const Occupation& occ) {
  if (occ.modes() != 3) throw std::invalid_argument("su(3) labels need a three-mode occupation");
  const int n = occ[0], l = occ[1], m = occ[2];
  return MultipletLabel3{HalfInteger::from_twice(n - l), Rational(n + l - 2 * m, 3),
                         {n + l + m, 0}};
}

std::vector<std::pair<Occupation, MultipletLabel3>> enumerate_multiplet(int n) {
  if (n < 0) throw std::invalid_argument("negative photon number");
  std::vector<std::pair<Occupation, MultipletLabel3>> out;
  for (const Occupation& occ : sector_basis(3, n)) out.emplace_back(occ, t3_y_label(occ));
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.second.y != y.second.y) return x.second.y > y.second.y;
    return x.second.t3 < y.second.t3;
  });
  return out;
}

Su3GeneratorSet su3_generators(int max_total_photons) {
  if (max_total_photons < 1) throw std::invalid_argument("su3_generators needs a cutoff >= 1");
  FockBasis basis = FockBasis::up_to(3, max_total_photons);

  std::array<Eigen::MatrixXcd, 8> f;
  for (std::size_t k = 0; k < 8; ++k) {
    f[k] = bilinear_matrix(basis, 0.5 * Eigen::MatrixXcd(gell_mann()[k]));
  }
  const Amplitude i(0.0, 1.0);
  Su3GeneratorSet set{std::move(basis), f, {}, {}, {}, {}, {}, {}, {}, {}};
  set.t_plus = f[0] + i * f[1];
  set.t_minus = f[0] - i * f[1];
  set.u_plus = f[5] + i * f[6];
  set.u_minus = f[5] - i * f[6];
  set.v_plus = f[3] + i * f[4];
  set.v_minus = f[3] - i * f[4];
  set.t3 = f[2];
  set.y = (2.0 / std::sqrt(3.0)) * f[7];
  return set;
}

ModeUnitary su3_euler(const EulerAngles& angles) {
  const Eigen::Matrix3cd u = exp_lambda3(angles.alpha) * exp_rotation(angles.beta, 0, 1) *
                             exp_lambda3(angles.gamma) * exp_rotation(angles.theta, 0, 2) *
                             exp_lambda3(angles.a) * exp_rotation(angles.b, 0, 1) *
                             exp_lambda3(angles.c) * exp_lambda8(angles.phi);
  return ModeUnitary(Eigen::MatrixXcd(u));
}

Eigen::Matrix<double, 8, 8> su3_adjoint(const ModeUnitary& u) {
  if (u.dim() != 3) throw std::invalid_argument("su3_adjoint needs a 3x3 unitary");
  return detail::adjoint_from_trace<8>(u.matrix(), gell_mann());
}

}  // namespace fockoptics
