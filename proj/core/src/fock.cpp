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

#include "fockoptics/fock.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "fockoptics/errors.hpp"

namespace fockoptics {

namespace {

void prune(PureState::Terms& terms) {
  std::erase_if(terms, [](const auto& kv) { return std::abs(kv.second) <= kPruneThreshold; });
}

void check_mode(const PureState& state, std::size_t mode) {
  if (mode >= state.modes()) {
    throw std::out_of_range("mode " + std::to_string(mode) + " out of range for a " +
                            std::to_string(state.modes()) + "-mode state");
  }
}

}  // namespace

Occupation::Occupation(std::vector<int> counts) : counts_(std::move(counts)) {
  for (int c : counts_) {
    if (c < 0) throw std::invalid_argument("negative photon count in occupation");
  }
}

Occupation::Occupation(std::initializer_list<int> counts)
    : Occupation(std::vector<int>(counts)) {}

int Occupation::total() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

Occupation Occupation::with(std::size_t mode, int count) const {
  std::vector<int> next = counts_;
  next.at(mode) = count;
  return Occupation(std::move(next));
}

PureState::PureState(std::size_t modes) : modes_(modes) {
  if (modes == 0) throw std::invalid_argument("a state needs at least one mode");
}

PureState::PureState(std::size_t modes, Terms terms) : PureState(modes) {
  for (const auto& [occ, amp] : terms) {
    if (occ.modes() != modes) {
      throw std::invalid_argument("occupation of length " + std::to_string(occ.modes()) +
                                  " in a " + std::to_string(modes) + "-mode state");
    }
  }
  prune(terms);
  terms_ = std::move(terms);
}

PureState PureState::basis(const Occupation& occ) {
  return PureState(occ.modes(), Terms{{occ, Amplitude(1.0)}});
}

Amplitude PureState::amplitude(const Occupation& occ) const {
  auto it = terms_.find(occ);
  return it == terms_.end() ? Amplitude(0.0) : it->second;
}

double PureState::norm_squared() const {
  double sum = 0.0;
  for (const auto& [occ, amp] : terms_) sum += std::norm(amp);
  return sum;
}

double PureState::norm() const { return std::sqrt(norm_squared()); }

bool PureState::is_normalized() const {
  return std::abs(norm_squared() - 1.0) <= kNormTolerance;
}

PureState PureState::normalized() const {
  const double n = norm();
  if (n <= kPruneThreshold) throw ValidationError("cannot normalize the zero state");
  return Amplitude(1.0 / n) * *this;
}

PureState operator*(Amplitude factor, const PureState& state) {
  PureState::Terms terms = state.terms_;
  for (auto& [occ, amp] : terms) amp *= factor;
  return PureState(state.modes_, std::move(terms));
}

PureState operator+(const PureState& a, const PureState& b) {
  if (a.modes_ != b.modes_) throw std::invalid_argument("adding states with different mode counts");
  PureState::Terms terms = a.terms_;
  for (const auto& [occ, amp] : b.terms_) terms[occ] += amp;
  return PureState(a.modes_, std::move(terms));
}

PureState operator-(const PureState& a, const PureState& b) { return a + Amplitude(-1.0) * b; }

PureState vacuum(std::size_t modes) {
  if (modes == 0) throw std::invalid_argument("vacuum needs at least one mode");
  return PureState::basis(Occupation(std::vector<int>(modes, 0)));
}

PureState create(const PureState& state, std::size_t mode) {
  check_mode(state, mode);
  PureState::Terms out;
  for (const auto& [occ, amp] : state.terms()) {
    const int n = occ[mode];
    out[occ.with(mode, n + 1)] += amp * std::sqrt(static_cast<double>(n + 1));
  }
  return PureState(state.modes(), std::move(out));
}

PureState annihilate(const PureState& state, std::size_t mode) {
  check_mode(state, mode);
  PureState::Terms out;
  for (const auto& [occ, amp] : state.terms()) {
    const int n = occ[mode];
    if (n == 0) continue;
    out[occ.with(mode, n - 1)] += amp * std::sqrt(static_cast<double>(n));
  }
  return PureState(state.modes(), std::move(out));
}

Amplitude inner_product(const PureState& a, const PureState& b) {
  if (a.modes() != b.modes()) {
    throw std::invalid_argument("inner product of states with different mode counts");
  }
  Amplitude sum = 0.0;
  // Walk the smaller map, look up in the larger.
  const bool a_smaller = a.size() <= b.size();
  const PureState& small = a_smaller ? a : b;
  const PureState& large = a_smaller ? b : a;
  for (const auto& [occ, amp] : small.terms()) {
    auto it = large.terms().find(occ);
    if (it == large.terms().end()) continue;
    sum += a_smaller ? std::conj(amp) * it->second : std::conj(it->second) * amp;
  }
  return sum;
}

std::map<int, PureState> total_photon_sectors(const PureState& state) {
  std::map<int, PureState::Terms> grouped;
  for (const auto& [occ, amp] : state.terms()) grouped[occ.total()].emplace(occ, amp);
  std::map<int, PureState> sectors;
  for (auto& [n, terms] : grouped) sectors.emplace(n, PureState(state.modes(), std::move(terms)));
  return sectors;
}

}  // namespace fockoptics
