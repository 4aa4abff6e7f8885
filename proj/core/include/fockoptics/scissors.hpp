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

// Generalized quantum scissors: teleportation of a0|0> + a1|1> + a2|2> from
// mode 1 to mode 3 through a two-photon entangled resource on modes 2 and 3,
// a beam splitter on modes 1 and 2, and photon counting on its outputs.
//
// Modes 1, 2, 3 are indices 0, 1, 2 of the three-mode states used here.
// Detector D1 counts output mode b1 (index 0), D2 counts b2 (index 1).

#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fockoptics/errors.hpp"
#include "fockoptics/fock.hpp"
#include "fockoptics/lift.hpp"
#include "fockoptics/su2.hpp"

namespace fockoptics {

/// Input amplitudes (a0, a1, a2); normalized within kNormTolerance.
class ScissorsInput {
 public:
  /// Throws ValidationError unless normalized.
  ScissorsInput(Amplitude a0, Amplitude a1, Amplitude a2);
  /// Rescales to unit norm. Throws std::invalid_argument if all are zero.
  static ScissorsInput normalizing(Amplitude a0, Amplitude a1, Amplitude a2);

  const std::array<Amplitude, 3>& amplitudes() const { return amplitudes_; }
  Amplitude operator[](std::size_t q) const { return amplitudes_[q]; }

 private:
  std::array<Amplitude, 3> amplitudes_;
};

/// C_{-1}|2,0> + C_0|1,1> + C_1|0,2> on modes 2 and 3.
class EprResource {
 public:
  /// Throws std::invalid_argument for the zero triple and ValidationError
  /// when the triple is not normalized.
  EprResource(Amplitude c_minus1, Amplitude c_0, Amplitude c_1);

  Amplitude c_minus1() const { return c_[0]; }
  Amplitude c_0() const { return c_[1]; }
  Amplitude c_1() const { return c_[2]; }
  const std::array<Amplitude, 3>& coefficients() const { return c_; }

 private:
  std::array<Amplitude, 3> c_;
};

struct BuiltInput {
  PureState state;
  bool renormalized = false;
};

/// Single-mode a0|0> + a1|1> + a2|2>, rescaled to unit norm when needed.
/// Throws std::invalid_argument if all amplitudes are zero.
BuiltInput build_input(Amplitude a0, Amplitude a1, Amplitude a2);

/// Two-mode resource state.
PureState build_epr(const EprResource& epr);

/// [[cos t, e^{i p} sin t], [-e^{-i p} sin t, cos t]], an SU(2) beam splitter.
ModeUnitary beam_splitter(double transmission_angle, double phase);

/// The three-mode state after the beam splitter, before detection.
PureState scissors_output_state(const ScissorsInput& input, const EprResource& epr,
                                const ModeUnitary& bs);

struct OutcomeRecord {
  /// (j, k): photons at D1 and D2.
  std::pair<int, int> detector_counts;
  double probability = 0.0;
  /// Normalized mode-3 state; the zero single-mode state when probability is 0.
  PureState conditional_state{1};
  /// l = (j + k)/2, l3 = (k - j)/2.
  MultipletLabel2 multiplet;
};

/// Every detector pattern with nonzero probability, plus (1, 1) always,
/// sorted by (j, k). Throws std::invalid_argument unless bs is 2x2.
std::vector<OutcomeRecord> run_scissors(const ScissorsInput& input, const EprResource& epr,
                                        const ModeUnitary& bs);

/// One coefficient family of the output polynomial
///   A0 (2A + 1B a3+ + 0C a3+^2) + A1 (3D + 2E a3+ + 1F a3+^2)
///     + A2/sqrt(2) (4G + 3H a3+ + 2I a3+^2),
/// where each nX is sum_{l3} X_{l3} b2+^{l+l3} b1+^{l-l3} with 2l = n.
/// Coefficients multiply the unnormalized creation-operator monomials.
struct CoefficientSet {
  char name = '?';
  int input_power = 0;   // q, the A_q it multiplies
  int mode3_power = 0;   // power of a3^dagger
  int two_l = 0;         // detector photons
  /// Entry i belongs to l3 = -l + i.
  std::vector<Amplitude> by_l3;

  /// Throws std::out_of_range for an l3 outside the multiplet.
  Amplitude at(HalfInteger l3) const;
};

class OutcomeDecomposition {
 public:
  /// Families 'A' .. 'I'; index 3q + p for input power q and mode-3 power p.
  std::array<std::optional<CoefficientSet>, 9> families;

  /// Empty when the attached A_q is zero. Throws std::invalid_argument for
  /// a name outside 'A'..'I'.
  const std::optional<CoefficientSet>& family(char name) const;

  /// The l3 = 0 coefficients of the 2l = 2 families, which decide teleportation.
  std::optional<Amplitude> a0() const;
  std::optional<Amplitude> e0() const;
  std::optional<Amplitude> i0() const;
};

OutcomeDecomposition decompose_outcomes(const ScissorsInput& input, const EprResource& epr,
                                        const ModeUnitary& bs);

/// Rebuilds the three-mode state from the coefficient families and the input
/// amplitudes, by evaluating the polynomial on the vacuum.
PureState reassemble_output_state(const OutcomeDecomposition& decomposition,
                                  const ScissorsInput& input);

/// |<a|b>|^2. Throws ValidationError unless both are normalized and
/// std::invalid_argument on a mode-count mismatch.
double fidelity(const PureState& a, const PureState& b);

inline constexpr double kBalancedResidualTolerance = 1e-8;

struct BalancedConfiguration {
  ModeUnitary bs;
  EprResource epr;
  /// |2A_0|, |2E_0|, |2I_0| at the returned point.
  std::array<double, 3> achieved;
  /// sum over the three of |X_0 e^{-i arg 2A_0} - target|.
  double residual;
  double transmission_angle;
  int evaluations;
};

class ConvergenceError : public ValidationError {
 public:
  ConvergenceError(const std::string& what, double best_residual)
      : ValidationError(what), best_residual_(best_residual) {}
  double best_residual() const { return best_residual_; }

 private:
  double best_residual_;
};

/// Searches beam splitters and resources for 2A_0 = 2E_0 = 2I_0 = target up
/// to a common phase. Throws std::invalid_argument unless 0 < target < 1 and
/// ConvergenceError when no point with residual < kBalancedResidualTolerance
/// is found. Deterministic.
BalancedConfiguration solve_balanced(double target = 1.0 / 3.0);

}  // namespace fockoptics
