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
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "fockoptics/fock.hpp"

namespace fockoptics {

/// Occupations of `modes` modes holding exactly `photons` photons, in
/// descending lexicographic order: (1,0), (0,1) for one photon on two modes.
/// Matrices indexed by a sector use this order, so the one-photon block of a
/// lifted unitary reads exactly like the mode matrix itself.
std::vector<Occupation> sector_basis(std::size_t modes, int photons);

/// An ordered, finite set of occupations used to turn operators into dense
/// matrices. Ordered by total photon number, then as in sector_basis.
class FockBasis {
 public:
  /// Every occupation with total <= max_total_photons.
  static FockBasis up_to(std::size_t modes, int max_total_photons);
  /// Occupations with total exactly `photons`.
  static FockBasis sector(std::size_t modes, int photons);

  std::size_t modes() const { return modes_; }
  std::size_t size() const { return states_.size(); }
  const Occupation& operator[](std::size_t i) const { return states_[i]; }
  const std::vector<Occupation>& states() const& { return states_; }
  /// By value on temporaries, so `for (auto& o : FockBasis::up_to(...).states())` is safe.
  std::vector<Occupation> states() && { return std::move(states_); }
  std::optional<std::size_t> index_of(const Occupation& occ) const;

  /// Throws std::invalid_argument when the state has support outside the basis.
  Eigen::VectorXcd to_vector(const PureState& state) const;
  PureState to_state(const Eigen::VectorXcd& coords) const;

 private:
  FockBasis(std::size_t modes, std::vector<Occupation> states);

  std::size_t modes_;
  std::vector<Occupation> states_;
  std::map<Occupation, std::size_t> index_;
};

/// Matrix of sum_{p,q} coeffs(p,q) a_p^dagger a_q on `basis`, where p and q
/// address modes mode_offset .. mode_offset + coeffs.rows() - 1. Built by
/// applying create/annihilate to each basis state. Photon-number conserving,
/// so the matrix is block diagonal over sectors and closed on any basis built
/// by FockBasis.
Eigen::MatrixXcd bilinear_matrix(const FockBasis& basis, const Eigen::MatrixXcd& coeffs,
                                 std::size_t mode_offset = 0);

}  // namespace fockoptics
