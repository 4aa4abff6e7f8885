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

#include "fockoptics/lift.hpp"

#include <array>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fockoptics/basis.hpp"
#include "fockoptics/errors.hpp"

namespace fockoptics {

namespace {

using Monomial = std::vector<int>;
using Polynomial = std::map<Monomial, Amplitude>;

double factorial(int n) {
  static const auto table = [] {
    std::array<double, kMaxLiftPhotons + 1> t{};
    t[0] = 1.0;
    for (int k = 1; k <= kMaxLiftPhotons; ++k) t[k] = t[k - 1] * k;
    return t;
  }();
  return table.at(static_cast<std::size_t>(n));
}

// p * (sum_i U_i,col x_i): multiplies by the image of one input creation operator.
Polynomial multiply_by_column(const Polynomial& p, const Eigen::MatrixXcd& u, Eigen::Index col) {
  Polynomial out;
  for (const auto& [mono, coeff] : p) {
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
      const Amplitude w = u(i, col);
      if (w == Amplitude(0.0)) continue;
      Monomial next = mono;
      ++next[static_cast<std::size_t>(i)];
      out[next] += coeff * w;
    }
  }
  return out;
}

}  // namespace

ModeUnitary::ModeUnitary(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || (entries_.rows() != 2 && entries_.rows() != 3)) {
    throw ValidationError("mode unitary must be 2x2 or 3x3, got " + std::to_string(entries_.rows()) +
                          "x" + std::to_string(entries_.cols()));
  }
  if (!entries_.allFinite()) throw ValidationError("mode unitary has non-finite entries");
  const auto n = entries_.rows();
  const double defect =
      (entries_.adjoint() * entries_ - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
  if (defect > kUnitaryTolerance) {
    throw ValidationError("matrix is not unitary: max |U^dagger U - I| = " + std::to_string(defect));
  }
  special_ = std::abs(entries_.determinant() - Amplitude(1.0)) <= kUnitaryTolerance;
}

ModeUnitary ModeUnitary::identity(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return ModeUnitary(Eigen::MatrixXcd::Identity(n, n));
}

ModeUnitary ModeUnitary::adjoint() const { return ModeUnitary(entries_.adjoint()); }

ModeUnitary operator*(const ModeUnitary& a, const ModeUnitary& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("multiplying mode unitaries of different size");
  return ModeUnitary(a.entries_ * b.entries_);
}

PureState apply_mode_unitary(const ModeUnitary& u, const PureState& state, std::size_t mode_offset) {
  const std::size_t dim = u.dim();
  if (mode_offset + dim > state.modes()) {
    throw std::out_of_range("a " + std::to_string(dim) + "-mode unitary at offset " +
                            std::to_string(mode_offset) + " does not fit a " +
                            std::to_string(state.modes()) + "-mode state");
  }
  if (!state.is_normalized()) {
    throw ValidationError("apply_mode_unitary needs a normalized state, norm^2 = " +
                          std::to_string(state.norm_squared()));
  }

  const Eigen::MatrixXcd& m = u.matrix();
  PureState::Terms out;
  for (const auto& [occ, amp] : state.terms()) {
    if (occ.total() > kMaxLiftPhotons) {
      throw std::invalid_argument("term with " + std::to_string(occ.total()) +
                                  " photons exceeds the lift cap of " +
                                  std::to_string(kMaxLiftPhotons));
    }
    // |n_0 .. n_{d-1}> = prod_j (a_j^dagger)^{n_j} / sqrt(n_j!) |0>.
    double norm = 1.0;
    for (std::size_t j = 0; j < dim; ++j) norm *= factorial(occ[mode_offset + j]);
    Polynomial poly{{Monomial(dim, 0), amp / std::sqrt(norm)}};
    for (std::size_t j = 0; j < dim; ++j) {
      for (int rep = 0; rep < occ[mode_offset + j]; ++rep) {
        poly = multiply_by_column(poly, m, static_cast<Eigen::Index>(j));
      }
    }
    // prod_i (b_i^dagger)^{k_i} |0> = sqrt(prod_i k_i!) |k>.
    for (const auto& [mono, coeff] : poly) {
      std::vector<int> counts(occ.counts().begin(), occ.counts().end());
      double weight = 1.0;
      for (std::size_t i = 0; i < dim; ++i) {
        counts[mode_offset + i] = mono[i];
        weight *= factorial(mono[i]);
      }
      out[Occupation(std::move(counts))] += coeff * std::sqrt(weight);
    }
  }
  return PureState(state.modes(), std::move(out));
}

Eigen::MatrixXcd lift_matrix(const ModeUnitary& u, int total_photons) {
  if (total_photons < 0) throw std::invalid_argument("negative photon number");
  if (total_photons > kMaxLiftPhotons) {
    throw std::invalid_argument("sector of " + std::to_string(total_photons) +
                                " photons exceeds the lift cap");
  }
  const FockBasis basis = FockBasis::sector(u.dim(), total_photons);
  const auto n = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    const PureState image =
        apply_mode_unitary(u, PureState::basis(basis[static_cast<std::size_t>(col)]));
    m.col(col) = basis.to_vector(image);
  }
  return m;
}

ModeUnitary random_unitary(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXcd z(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) z(i, j) = Amplitude(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const Amplitude d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return ModeUnitary(q);
}

ModeUnitary random_special_unitary(std::size_t dim, std::mt19937_64& rng) {
  const ModeUnitary u = random_unitary(dim, rng);
  const double phase = std::arg(u.matrix().determinant());
  const Amplitude fix = std::polar(1.0, -phase / static_cast<double>(dim));
  return ModeUnitary(u.matrix() * fix);
}

}  // namespace fockoptics
