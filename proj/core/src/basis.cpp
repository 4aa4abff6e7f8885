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

#include "fockoptics/basis.hpp"

#include <stdexcept>
#include <string>

namespace fockoptics {

namespace {

// Appends every composition of `photons` into counts[mode..], largest first.
void compositions(std::vector<int>& counts, std::size_t mode, int photons,
                  std::vector<Occupation>& out) {
  if (mode + 1 == counts.size()) {
    counts[mode] = photons;
    out.emplace_back(counts);
    return;
  }
  for (int n = photons; n >= 0; --n) {
    counts[mode] = n;
    compositions(counts, mode + 1, photons - n, out);
  }
}

}  // namespace

std::vector<Occupation> sector_basis(std::size_t modes, int photons) {
  if (modes == 0) throw std::invalid_argument("sector_basis needs at least one mode");
  if (photons < 0) throw std::invalid_argument("negative photon number");
  std::vector<Occupation> out;
  std::vector<int> counts(modes, 0);
  compositions(counts, 0, photons, out);
  return out;
}

FockBasis::FockBasis(std::size_t modes, std::vector<Occupation> states)
    : modes_(modes), states_(std::move(states)) {
  for (std::size_t i = 0; i < states_.size(); ++i) index_.emplace(states_[i], i);
}

FockBasis FockBasis::up_to(std::size_t modes, int max_total_photons) {
  if (max_total_photons < 0) throw std::invalid_argument("negative photon cutoff");
  std::vector<Occupation> states;
  for (int n = 0; n <= max_total_photons; ++n) {
    auto sector = sector_basis(modes, n);
    states.insert(states.end(), sector.begin(), sector.end());
  }
  return FockBasis(modes, std::move(states));
}

FockBasis FockBasis::sector(std::size_t modes, int photons) {
  return FockBasis(modes, sector_basis(modes, photons));
}

std::optional<std::size_t> FockBasis::index_of(const Occupation& occ) const {
  auto it = index_.find(occ);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Eigen::VectorXcd FockBasis::to_vector(const PureState& state) const {
  if (state.modes() != modes_) throw std::invalid_argument("state and basis mode counts differ");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(size()));
  for (const auto& [occ, amp] : state.terms()) {
    auto i = index_of(occ);
    if (!i) throw std::invalid_argument("state has support outside the basis");
    v(static_cast<Eigen::Index>(*i)) = amp;
  }
  return v;
}

PureState FockBasis::to_state(const Eigen::VectorXcd& coords) const {
  if (static_cast<std::size_t>(coords.size()) != size()) {
    throw std::invalid_argument("coordinate vector does not match basis size");
  }
  PureState::Terms terms;
  for (std::size_t i = 0; i < size(); ++i) terms.emplace(states_[i], coords(static_cast<Eigen::Index>(i)));
  return PureState(modes_, std::move(terms));
}

Eigen::MatrixXcd bilinear_matrix(const FockBasis& basis, const Eigen::MatrixXcd& coeffs,
                                 std::size_t mode_offset) {
  if (coeffs.rows() != coeffs.cols()) throw std::invalid_argument("coefficient matrix must be square");
  const auto dim = static_cast<std::size_t>(coeffs.rows());
  if (mode_offset + dim > basis.modes()) throw std::out_of_range("coefficient matrix exceeds basis modes");

  const auto n = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    const PureState ket = PureState::basis(basis[static_cast<std::size_t>(col)]);
    for (std::size_t q = 0; q < dim; ++q) {
      const PureState lowered = annihilate(ket, mode_offset + q);
      if (lowered.empty()) continue;
      for (std::size_t p = 0; p < dim; ++p) {
        const Amplitude c = coeffs(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q));
        if (c == Amplitude(0.0)) continue;
        const PureState raised = create(lowered, mode_offset + p);
        for (const auto& [occ, amp] : raised.terms()) {
          auto row = basis.index_of(occ);
          // Bilinears conserve photon number, so the image stays in the basis.
          if (!row) throw std::logic_error("bilinear image left the basis");
          m(static_cast<Eigen::Index>(*row), col) += c * amp;
        }
      }
    }
  }
  return m;
}

}  // namespace fockoptics
