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

#include "fockoptics/selfcheck.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include <Eigen/Dense>

#include "fockoptics/basis.hpp"
#include "fockoptics/lift.hpp"
#include "fockoptics/scissors.hpp"
#include "fockoptics/su2.hpp"
#include "fockoptics/su3.hpp"

namespace fockoptics {

namespace {

constexpr std::uint64_t kSeed = 20260415;

double max_abs(const Eigen::MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

Eigen::MatrixXcd commutator(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  return a * b - b * a;
}

// Runs `body`, which returns the worst deviation seen, against `tolerance`.
CheckResult tolerance_check(std::string name, double tolerance, const std::function<double()>& body) {
  CheckResult r{std::move(name), false, {}};
  try {
    const double worst = body();
    std::ostringstream os;
    os.precision(3);
    os << "max deviation " << worst << " (tolerance " << tolerance << ")";
    r.detail = os.str();
    r.passed = worst <= tolerance;
  } catch (const std::exception& e) {
    r.detail = std::string("threw: ") + e.what();
  }
  return r;
}

double lift_unitarity() {
  std::mt19937_64 rng(kSeed);
  double worst = 0.0;
  for (std::size_t dim : {2u, 3u}) {
    for (int trial = 0; trial < 10; ++trial) {
      const ModeUnitary u = random_unitary(dim, rng);
      for (int n = 0; n <= 4; ++n) {
        const Eigen::MatrixXcd m = lift_matrix(u, n);
        worst = std::max(worst, max_abs(m.adjoint() * m - Eigen::MatrixXcd::Identity(m.rows(), m.cols())));
      }
    }
  }
  return worst;
}

double lift_homomorphism() {
  std::mt19937_64 rng(kSeed + 1);
  double worst = 0.0;
  for (std::size_t dim : {2u, 3u}) {
    for (int trial = 0; trial < 10; ++trial) {
      const ModeUnitary u1 = random_unitary(dim, rng), u2 = random_unitary(dim, rng);
      for (int n = 0; n <= 4; ++n) {
        worst = std::max(worst, max_abs(lift_matrix(u1 * u2, n) - lift_matrix(u1, n) * lift_matrix(u2, n)));
      }
    }
  }
  return worst;
}

double lift_fundamental() {
  std::mt19937_64 rng(kSeed + 2);
  double worst = 0.0;
  for (std::size_t dim : {2u, 3u}) {
    const ModeUnitary u = random_unitary(dim, rng);
    worst = std::max(worst, max_abs(lift_matrix(u, 1) - u.matrix()));
  }
  return worst;
}

double su2_commutators() {
  const auto g = schwinger_generators(4);
  const auto& l = g.generators;
  const Amplitude i(0.0, 1.0);
  double worst = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    worst = std::max(worst, max_abs(commutator(l[k], l[(k + 1) % 3]) - i * l[(k + 2) % 3]));
  }
  worst = std::max(worst, max_abs(commutator(g.raise, g.lower) - 2.0 * l[2]));
  worst = std::max(worst, max_abs(commutator(l[2], g.raise) - g.raise));
  worst = std::max(worst, max_abs(commutator(l[2], g.lower) + g.lower));
  return worst;
}

double su2_casimir() {
  const auto g = schwinger_generators(6);
  const Eigen::MatrixXcd c =
      g.generators[0] * g.generators[0] + g.generators[1] * g.generators[1] +
      g.generators[2] * g.generators[2];
  Eigen::MatrixXcd expected = Eigen::MatrixXcd::Zero(c.rows(), c.cols());
  for (std::size_t s = 0; s < g.basis.size(); ++s) {
    const auto label = multiplet_label(g.basis[s]);
    const auto idx = static_cast<Eigen::Index>(s);
    expected(idx, idx) = to_double(casimir_eigenvalue(label.l));
  }
  return max_abs(c - expected);
}

template <int N, typename Generators, typename Adjoint>
double defining_relation(const ModeUnitary& u, const Generators& mode_generators, Adjoint adjoint) {
  const auto r = adjoint(u);
  double worst = 0.0;
  for (int n = 1; n <= 4; ++n) {
    const FockBasis basis = FockBasis::sector(u.dim(), n);
    std::array<Eigen::MatrixXcd, N> gens;
    for (std::size_t k = 0; k < N; ++k) {
      gens[k] = bilinear_matrix(basis, 0.5 * Eigen::MatrixXcd(mode_generators[k]));
    }
    const Eigen::MatrixXcd lifted = lift_matrix(u, n);
    for (int k = 0; k < N; ++k) {
      // Output-mode generator b^dagger g b / 2 with b = U a, i.e. lift^dagger G lift.
      const Eigen::MatrixXcd output = lifted.adjoint() * gens[static_cast<std::size_t>(k)] * lifted;
      Eigen::MatrixXcd combo = Eigen::MatrixXcd::Zero(output.rows(), output.cols());
      for (int l = 0; l < N; ++l) combo += r(k, l) * gens[static_cast<std::size_t>(l)];
      worst = std::max(worst, max_abs(output - combo));
    }
  }
  return worst;
}

template <int N>
double orthogonality_defect(const Eigen::Matrix<double, N, N>& r) {
  const double ortho = (r.transpose() * r - Eigen::Matrix<double, N, N>::Identity()).cwiseAbs().maxCoeff();
  return std::max(ortho, std::abs(r.determinant() - 1.0));
}

double su2_adjoint_checks() {
  std::mt19937_64 rng(kSeed + 3);
  double worst = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const ModeUnitary u1 = random_unitary(2, rng), u2 = random_unitary(2, rng);
    worst = std::max(worst, orthogonality_defect<3>(su2_adjoint(u1)));
    worst = std::max(worst, (su2_adjoint(u1 * u2) - su2_adjoint(u1) * su2_adjoint(u2)).cwiseAbs().maxCoeff());
    worst = std::max(worst, defining_relation<3>(u1, pauli_matrices(), su2_adjoint));
  }
  return worst;
}

double su3_adjoint_checks() {
  std::mt19937_64 rng(kSeed + 4);
  double worst = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const ModeUnitary u1 = random_unitary(3, rng), u2 = random_unitary(3, rng);
    worst = std::max(worst, orthogonality_defect<8>(su3_adjoint(u1)));
    worst = std::max(worst, (su3_adjoint(u1 * u2) - su3_adjoint(u1) * su3_adjoint(u2)).cwiseAbs().maxCoeff());
    worst = std::max(worst, defining_relation<8>(u1, gell_mann(), su3_adjoint));
  }
  return worst;
}

CheckResult gell_mann_identities() {
  CheckResult r{"gell-mann identities (exact)", true, "hermitian, traceless, Tr(l_a l_b) = 2 delta_ab"};
  const auto& g = gell_mann_exact();
  for (std::size_t a = 0; a < 8; ++a) {
    std::complex<int> trace = 0;
    for (std::size_t p = 0; p < 3; ++p) {
      trace += g[a].entries[p][p];
      for (std::size_t q = 0; q < 3; ++q) {
        if (g[a].entries[p][q] != std::conj(g[a].entries[q][p])) r.passed = false;
      }
    }
    if (trace != 0) r.passed = false;
    for (std::size_t b = 0; b < 8; ++b) {
      std::complex<int> tr = 0;
      for (std::size_t p = 0; p < 3; ++p) {
        for (std::size_t q = 0; q < 3; ++q) tr += g[a].entries[p][q] * g[b].entries[q][p];
      }
      if (tr.imag() != 0) r.passed = false;
      if (a != b && tr != 0) r.passed = false;
      if (a == b && g[a].scale_squared * Rational(tr.real()) != Rational(2)) r.passed = false;
    }
  }
  if (!r.passed) r.detail = "an identity failed";
  return r;
}

double su3_commutators() {
  const auto g = su3_generators(4);
  const auto& f = su3_structure_constants();
  const Amplitude i(0.0, 1.0);
  double worst = 0.0;
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = 0; b < 8; ++b) {
      Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Zero(g.basis.size(), g.basis.size());
      for (std::size_t c = 0; c < 8; ++c) rhs += i * f[a][b][c] * g.generators[c];
      worst = std::max(worst, max_abs(commutator(g.generators[a], g.generators[b]) - rhs));
    }
  }
  return worst;
}

CheckResult ladder_geometry() {
  CheckResult r{"su(3) ladder shifts on the T3-Y plane", true, "all basis states with n <= 4"};
  const auto g = su3_generators(4);
  struct Move {
    const Eigen::MatrixXcd* op;
    int twice_dt3;
    Rational dy;
  };
  const std::array<Move, 6> moves{{{&g.t_plus, 2, Rational(0)},
                                   {&g.t_minus, -2, Rational(0)},
                                   {&g.u_plus, -1, Rational(1)},
                                   {&g.u_minus, 1, Rational(-1)},
                                   {&g.v_plus, 1, Rational(1)},
                                   {&g.v_minus, -1, Rational(-1)}}};
  for (const auto& mv : moves) {
    for (Eigen::Index col = 0; col < mv.op->cols(); ++col) {
      const auto from = t3_y_label(g.basis[static_cast<std::size_t>(col)]);
      for (Eigen::Index row = 0; row < mv.op->rows(); ++row) {
        if (std::abs((*mv.op)(row, col)) <= kPruneThreshold) continue;
        const auto to = t3_y_label(g.basis[static_cast<std::size_t>(row)]);
        if (to.t3.twice() - from.t3.twice() != mv.twice_dt3 || to.y - from.y != mv.dy) {
          r.passed = false;
          r.detail = "unexpected shift from " + from.t3.to_string() + ", " + to_string(from.y);
        }
      }
    }
  }
  return r;
}

double euler_checks() {
  std::mt19937_64 rng(kSeed + 5);
  std::uniform_real_distribution<double> angle(-10.0, 10.0);
  double worst = max_abs(su3_euler({}).matrix() - Eigen::MatrixXcd::Identity(3, 3));
  for (int trial = 0; trial < 200; ++trial) {
    const ModeUnitary u = su3_euler({angle(rng), angle(rng), angle(rng), angle(rng), angle(rng),
                                     angle(rng), angle(rng), angle(rng)});
    worst = std::max(worst, max_abs(u.matrix().adjoint() * u.matrix() - Eigen::MatrixXcd::Identity(3, 3)));
    worst = std::max(worst, std::abs(u.matrix().determinant() - 1.0));
  }
  return worst;
}

double hong_ou_mandel() {
  const PureState out = apply_mode_unitary(beam_splitter(std::numbers::pi / 4.0, 0.0),
                                           PureState::basis(Occupation{1, 1}));
  return std::abs(out.amplitude(Occupation{1, 1}));
}

double scissors_completeness() {
  std::mt19937_64 rng(kSeed + 6);
  std::normal_distribution<double> normal;
  auto z = [&] { return Amplitude(normal(rng), normal(rng)); };
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto input = ScissorsInput::normalizing(z(), z(), z());
    const auto c = std::array<Amplitude, 3>{z(), z(), z()};
    const double n = std::sqrt(std::norm(c[0]) + std::norm(c[1]) + std::norm(c[2]));
    const EprResource epr(c[0] / n, c[1] / n, c[2] / n);
    double total = 0.0;
    for (const auto& rec : run_scissors(input, epr, random_unitary(2, rng))) total += rec.probability;
    worst = std::max(worst, std::abs(total - 1.0));
  }
  return worst;
}

CheckResult balanced_scissors() {
  CheckResult r{"balanced scissors: P(1,1) = 1/9 and unit fidelity", false, {}};
  try {
    const auto config = solve_balanced();
    std::mt19937_64 rng(kSeed + 7);
    std::normal_distribution<double> normal;
    auto z = [&] { return Amplitude(normal(rng), normal(rng)); };
    double worst_p = 0.0, worst_f = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const auto input = ScissorsInput::normalizing(z(), z(), z());
      const auto target = build_input(input[0], input[1], input[2]).state;
      for (const auto& rec : run_scissors(input, config.epr, config.bs)) {
        if (rec.detector_counts != std::pair{1, 1}) continue;
        worst_p = std::max(worst_p, std::abs(rec.probability - 1.0 / 9.0));
        worst_f = std::max(worst_f, 1.0 - fidelity(rec.conditional_state, target));
      }
    }
    std::ostringstream os;
    os.precision(3);
    os << "max |P - 1/9| " << worst_p << ", max 1 - F " << worst_f << ", solver residual "
       << config.residual;
    r.detail = os.str();
    r.passed = worst_p < 1e-6 && worst_f < 1e-8;
  } catch (const std::exception& e) {
    r.detail = std::string("threw: ") + e.what();
  }
  return r;
}

}  // namespace

std::vector<CheckResult> run_selfcheck() {
  std::vector<CheckResult> out;
  out.push_back(tolerance_check("lift sectors are unitary (n <= 4)", 1e-10, lift_unitarity));
  out.push_back(tolerance_check("lift is a homomorphism (n <= 4)", 1e-10, lift_homomorphism));
  out.push_back(tolerance_check("one-photon sector equals the mode matrix", 1e-12, lift_fundamental));
  out.push_back(tolerance_check("su(2) commutators", 1e-12, su2_commutators));
  out.push_back(tolerance_check("su(2) Casimir equals l(l+1)", 1e-12, su2_casimir));
  out.push_back(tolerance_check("su(2) adjoint in SO(3), homomorphic, defining relation", 1e-10,
                                su2_adjoint_checks));
  out.push_back(gell_mann_identities());
  out.push_back(tolerance_check("su(3) bosonic commutators (n <= 4)", 1e-12, su3_commutators));
  out.push_back(ladder_geometry());
  out.push_back(tolerance_check("su(3) adjoint in SO(8), homomorphic, defining relation", 1e-10,
                                su3_adjoint_checks));
  out.push_back(tolerance_check("Euler parameterization is special unitary", 1e-12, euler_checks));
  out.push_back(tolerance_check("Hong-Ou-Mandel null", 1e-12, hong_ou_mandel));
  out.push_back(tolerance_check("scissors outcome probabilities sum to 1", 1e-10, scissors_completeness));
  out.push_back(balanced_scissors());
  return out;
}

}  // namespace fockoptics
