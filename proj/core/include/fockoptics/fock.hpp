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

// Sparse multimode photon-number states and the bosonic ladder actions on
// them. Occupation vectors are ordered lexicographically, which fixes the
// iteration order of every PureState and therefore its serialization.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace fockoptics {

using Amplitude = std::complex<double>;

/// Terms with |amplitude| at or below this are dropped after arithmetic.
inline constexpr double kPruneThreshold = 1e-14;
/// A state is normalized when |<psi|psi> - 1| <= kNormTolerance.
inline constexpr double kNormTolerance = 1e-10;

/// Photon counts per mode; one Fock basis label.
class Occupation {
 public:
  Occupation() = default;
  /// Throws std::invalid_argument on a negative count.
  explicit Occupation(std::vector<int> counts);
  Occupation(std::initializer_list<int> counts);

  std::size_t modes() const { return counts_.size(); }
  int operator[](std::size_t mode) const { return counts_[mode]; }
  int at(std::size_t mode) const { return counts_.at(mode); }
  std::span<const int> counts() const { return counts_; }
  int total() const;

  /// Copy with `mode` set to `count`.
  Occupation with(std::size_t mode, int count) const;

  auto operator<=>(const Occupation&) const = default;

 private:
  std::vector<int> counts_;
};

class PureState {
 public:
  using Terms = std::map<Occupation, Amplitude>;

  /// The zero vector on `modes` modes. Throws std::invalid_argument for 0 modes.
  explicit PureState(std::size_t modes);
  /// Prunes small amplitudes. Throws std::invalid_argument if any occupation
  /// has the wrong length.
  PureState(std::size_t modes, Terms terms);

  static PureState basis(const Occupation& occ);

  std::size_t modes() const { return modes_; }
  const Terms& terms() const& { return terms_; }
  /// By value on temporaries, so range-for over `f(...).terms()` is safe.
  Terms terms() && { return std::move(terms_); }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Zero when `occ` is absent.
  Amplitude amplitude(const Occupation& occ) const;

  double norm_squared() const;
  double norm() const;
  bool is_normalized() const;

  /// Throws ValidationError for the zero state.
  PureState normalized() const;

  friend PureState operator*(Amplitude factor, const PureState& state);
  friend PureState operator+(const PureState& a, const PureState& b);
  friend PureState operator-(const PureState& a, const PureState& b);

 private:
  std::size_t modes_;
  Terms terms_;
};

/// All-zero occupation with amplitude 1.
PureState vacuum(std::size_t modes);

/// a^dagger on `mode`; the result is generally unnormalized.
PureState create(const PureState& state, std::size_t mode);

/// a on `mode`; terms with no photon in `mode` vanish.
PureState annihilate(const PureState& state, std::size_t mode);

/// <a|b>. Throws std::invalid_argument on a mode-count mismatch.
Amplitude inner_product(const PureState& a, const PureState& b);

/// Splits the state by total photon number. Sectors are left unnormalized.
std::map<int, PureState> total_photon_sectors(const PureState& state);

}  // namespace fockoptics
