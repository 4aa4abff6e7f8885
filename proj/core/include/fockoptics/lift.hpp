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

// Lifting a passive linear-optical mode transformation to Fock space.
//
// Convention: output annihilation operators are b_i = sum_j U_ij a_j. Writing
// an input state as a polynomial in the input creation operators and
// substituting a_j^dagger -> sum_i U_ij b_i^dagger gives the output state in
// the output-mode Fock basis. With this choice the one-photon sector of the
// lift is U itself and lift(U1 U2) = lift(U1) lift(U2).

#pragma once

#include <cstddef>
#include <random>

#include <Eigen/Dense>

#include "fockoptics/fock.hpp"

namespace fockoptics {

inline constexpr double kUnitaryTolerance = 1e-12;
/// Largest total photon number accepted by the lift.
inline constexpr int kMaxLiftPhotons = 12;

/// A 2x2 (beam splitter) or 3x3 (tritter) unitary acting on mode operators.
class ModeUnitary {
 public:
  /// Throws ValidationError unless `entries` is 2x2 or 3x3 with
  /// max |(U^dagger U - I)_ij| <= kUnitaryTolerance.
  explicit ModeUnitary(Eigen::MatrixXcd entries);

  static ModeUnitary identity(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return entries_; }
  Amplitude operator()(std::size_t row, std::size_t col) const {
    return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }
  /// det U = 1 within kUnitaryTolerance.
  bool is_special() const { return special_; }

  ModeUnitary adjoint() const;
  friend ModeUnitary operator*(const ModeUnitary& a, const ModeUnitary& b);

 private:
  Eigen::MatrixXcd entries_;
  bool special_ = false;
};

/// Applies U to modes [mode_offset, mode_offset + U.dim()) of a normalized
/// state by multinomial expansion of each term's creation-operator monomial.
/// Other modes pass through unchanged.
///
/// Throws ValidationError for an unnormalized state, std::out_of_range when
/// the addressed modes do not fit, and std::invalid_argument for a term with
/// more than kMaxLiftPhotons photons.
PureState apply_mode_unitary(const ModeUnitary& u, const PureState& state,
                             std::size_t mode_offset = 0);

/// Dense matrix of apply_mode_unitary on the `total_photons` sector of
/// U.dim() modes, indexed by sector_basis order.
Eigen::MatrixXcd lift_matrix(const ModeUnitary& u, int total_photons);

/// Haar-distributed unitary (QR of a complex Ginibre matrix, phases fixed).
ModeUnitary random_unitary(std::size_t dim, std::mt19937_64& rng);
/// random_unitary rescaled by a root of its determinant so that det = 1.
ModeUnitary random_special_unitary(std::size_t dim, std::mt19937_64& rng);

}  // namespace fockoptics
