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

#include "fockoptics/scissors.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "nelder_mead.hpp"

namespace fockoptics {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

double sum_of_norms(const std::array<Amplitude, 3>& a) {
  return std::norm(a[0]) + std::norm(a[1]) + std::norm(a[2]);
}

// A2 enters the output polynomial as A2/sqrt(2), from |2> = a^dagger^2/sqrt(2) |0>.
double input_prefactor(int q) { return q == 2 ? 1.0 / std::numbers::sqrt2 : 1.0; }

constexpr std::array<char, 9> kFamilyNames{'A', 'B', 'C', 'D', 'E', 'F', 'G', 'H', 'I'};

}  // namespace

ScissorsInput::ScissorsInput(Amplitude a0, Amplitude a1, Amplitude a2) : amplitudes_{a0, a1, a2} {
  const double s = sum_of_norms(amplitudes_);
  if (std::abs(s - 1.0) > kNormTolerance) {
    throw ValidationError("scissors input is not normalized: sum |a|^2 = " + std::to_string(s));
  }
}

ScissorsInput ScissorsInput::normalizing(Amplitude a0, Amplitude a1, Amplitude a2) {
  const double n = std::sqrt(sum_of_norms({a0, a1, a2}));
  if (n <= kPruneThreshold) throw std::invalid_argument("scissors input amplitudes are all zero");
  return ScissorsInput(a0 / n, a1 / n, a2 / n);
}

EprResource::EprResource(Amplitude c_minus1, Amplitude c_0, Amplitude c_1)
    : c_{c_minus1, c_0, c_1} {
  const double s = sum_of_norms(c_);
  if (s <= kPruneThreshold * kPruneThreshold) throw std::invalid_argument("zero entangled resource");
  if (std::abs(s - 1.0) > kNormTolerance) {
    throw ValidationError("entangled resource is not normalized: sum |c|^2 = " + std::to_string(s));
  }
}

BuiltInput build_input(Amplitude a0, Amplitude a1, Amplitude a2) {
  PureState state(1, {{Occupation{0}, a0}, {Occupation{1}, a1}, {Occupation{2}, a2}});
  if (state.empty()) throw std::invalid_argument("scissors input amplitudes are all zero");
  if (state.is_normalized()) return {std::move(state), false};
  return {state.normalized(), true};
}

PureState build_epr(const EprResource& epr) {
  return PureState(2, {{Occupation{2, 0}, epr.c_minus1()},
                       {Occupation{1, 1}, epr.c_0()},
                       {Occupation{0, 2}, epr.c_1()}});
}

ModeUnitary beam_splitter(double transmission_angle, double phase) {
  const double c = std::cos(transmission_angle), s = std::sin(transmission_angle);
  Eigen::MatrixXcd m(2, 2);
  m(0, 0) = c;
  m(0, 1) = std::polar(s, phase);
  m(1, 0) = -std::polar(s, -phase);
  m(1, 1) = c;
  return ModeUnitary(m);
}

PureState scissors_output_state(const ScissorsInput& input, const EprResource& epr,
                                const ModeUnitary& bs) {
  if (bs.dim() != 2) throw std::invalid_argument("the scissors beam splitter must be 2x2");
  const PureState resource = build_epr(epr);
  PureState::Terms product;
  for (int q = 0; q < 3; ++q) {
    for (const auto& [occ, c] : resource.terms()) {
      product[Occupation{q, occ[0], occ[1]}] += input[static_cast<std::size_t>(q)] * c;
    }
  }
  return apply_mode_unitary(bs, PureState(3, std::move(product)), 0);
}

std::vector<OutcomeRecord> run_scissors(const ScissorsInput& input, const EprResource& epr,
                                        const ModeUnitary& bs) {
  const PureState psi = scissors_output_state(input, epr, bs);

  std::map<std::pair<int, int>, PureState::Terms> by_pattern;
  by_pattern[{1, 1}];
  for (const auto& [occ, amp] : psi.terms()) {
    by_pattern[{occ[0], occ[1]}].emplace(Occupation{occ[2]}, amp);
  }

  std::vector<OutcomeRecord> out;
  for (auto& [pattern, terms] : by_pattern) {
    const auto [j, k] = pattern;
    PureState conditional(1, std::move(terms));
    OutcomeRecord rec{pattern, conditional.norm_squared(), PureState(1),
                      MultipletLabel2::make(HalfInteger::from_twice(j + k),
                                            HalfInteger::from_twice(k - j))};
    if (rec.probability > 0.0) rec.conditional_state = conditional.normalized();
    out.push_back(std::move(rec));
  }
  return out;
}

Amplitude CoefficientSet::at(HalfInteger l3) const {
  const std::int64_t index = (l3.twice() + two_l);
  if (index < 0 || index % 2 != 0 || index / 2 >= static_cast<std::int64_t>(by_l3.size())) {
    throw std::out_of_range("l3 = " + l3.to_string() + " is outside the multiplet");
  }
  return by_l3[static_cast<std::size_t>(index / 2)];
}

const std::optional<CoefficientSet>& OutcomeDecomposition::family(char name) const {
  if (name < 'A' || name > 'I') throw std::invalid_argument(std::string("no coefficient family ") + name);
  return families[static_cast<std::size_t>(name - 'A')];
}

namespace {

std::optional<Amplitude> central(const std::optional<CoefficientSet>& set) {
  if (!set) return std::nullopt;
  return set->at(HalfInteger{});
}

}  // namespace

std::optional<Amplitude> OutcomeDecomposition::a0() const { return central(family('A')); }
std::optional<Amplitude> OutcomeDecomposition::e0() const { return central(family('E')); }
std::optional<Amplitude> OutcomeDecomposition::i0() const { return central(family('I')); }

OutcomeDecomposition decompose_outcomes(const ScissorsInput& input, const EprResource& epr,
                                        const ModeUnitary& bs) {
  const PureState psi = scissors_output_state(input, epr, bs);
  OutcomeDecomposition out;
  for (int q = 0; q < 3; ++q) {
    const Amplitude a = input[static_cast<std::size_t>(q)];
    if (std::abs(a) <= kPruneThreshold) continue;
    for (int p = 0; p < 3; ++p) {
      CoefficientSet set;
      set.name = kFamilyNames[static_cast<std::size_t>(3 * q + p)];
      set.input_power = q;
      set.mode3_power = p;
      set.two_l = q + 2 - p;
      // Entry i is the monomial b2^dagger^i b1^dagger^(2l - i) a3^dagger^p,
      // i.e. Fock state |2l - i, i, p> with weight sqrt((2l - i)! i! p!).
      for (int i = 0; i <= set.two_l; ++i) {
        const int j = set.two_l - i;
        const Amplitude amp = psi.amplitude(Occupation{j, i, p});
        const double monomial_norm = std::sqrt(factorial(j) * factorial(i) * factorial(p));
        set.by_l3.push_back(amp / monomial_norm / (a * input_prefactor(q)));
      }
      out.families[static_cast<std::size_t>(3 * q + p)] = std::move(set);
    }
  }
  return out;
}

PureState reassemble_output_state(const OutcomeDecomposition& decomposition,
                                  const ScissorsInput& input) {
  PureState::Terms terms;
  for (const auto& set : decomposition.families) {
    if (!set) continue;
    const Amplitude weight = input[static_cast<std::size_t>(set->input_power)] *
                             input_prefactor(set->input_power);
    const int p = set->mode3_power;
    for (int i = 0; i <= set->two_l; ++i) {
      const int j = set->two_l - i;
      const double monomial_norm = std::sqrt(factorial(j) * factorial(i) * factorial(p));
      terms[Occupation{j, i, p}] += weight * set->by_l3[static_cast<std::size_t>(i)] * monomial_norm;
    }
  }
  return PureState(3, std::move(terms));
}

double fidelity(const PureState& a, const PureState& b) {
  if (!a.is_normalized() || !b.is_normalized()) throw ValidationError("fidelity needs normalized states");
  return std::norm(inner_product(a, b));
}

namespace {

struct Candidate {
  double theta;
  std::array<double, 3> magnitudes;
};

// Point on the positive octant of the unit sphere.
std::array<double, 3> resource_magnitudes(double u, double v) {
  return {std::abs(std::sin(u) * std::cos(v)), std::abs(std::cos(u)),
          std::abs(std::sin(u) * std::sin(v))};
}

std::array<Amplitude, 3> central_coefficients(const OutcomeDecomposition& d) {
  return {d.a0().value_or(0.0), d.e0().value_or(0.0), d.i0().value_or(0.0)};
}

double aligned_residual(const std::array<Amplitude, 3>& x, double target) {
  const Amplitude align = std::abs(x[0]) > 0.0 ? std::conj(x[0]) / std::abs(x[0]) : Amplitude(1.0);
  double r = 0.0;
  for (const auto& c : x) r += std::abs(c * align - target);
  return r;
}

}  // namespace

BalancedConfiguration solve_balanced(double target) {
  if (!(target > 0.0 && target < 1.0)) throw std::invalid_argument("target must lie in (0, 1)");

  // All three A_q nonzero so every family is defined.
  const double third = 1.0 / std::sqrt(3.0);
  const ScissorsInput probe(third, third, third);
  int evaluations = 0;

  // The resource phases are fixed afterwards by alignment, so the search runs
  // over the transmission angle and the resource magnitudes only.
  auto coefficients_at = [&](double theta, const std::array<double, 3>& mag) {
    ++evaluations;
    const EprResource epr(mag[0], mag[1], mag[2]);
    return central_coefficients(decompose_outcomes(probe, epr, beam_splitter(theta, 0.0)));
  };
  auto objective = [&](const std::vector<double>& x) {
    const auto c = coefficients_at(x[0], resource_magnitudes(x[1], x[2]));
    double s = 0.0;
    for (const auto& z : c) s += (std::abs(z) - target) * (std::abs(z) - target);
    return s;
  };

  // Coarse grid, first strict minimum in lexicographic parameter order wins.
  constexpr int kThetaSteps = 24, kSphereSteps = 12;
  const double half_pi = std::numbers::pi / 2.0;
  std::vector<double> best_x;
  double best_value = std::numeric_limits<double>::infinity();
  for (int a = 1; a < kThetaSteps; ++a) {
    for (int b = 0; b <= kSphereSteps; ++b) {
      for (int c = 0; c <= kSphereSteps; ++c) {
        const std::vector<double> x{half_pi * a / kThetaSteps, half_pi * b / kSphereSteps,
                                    half_pi * c / kSphereSteps};
        const double value = objective(x);
        if (value < best_value) {
          best_value = value;
          best_x = x;
        }
      }
    }
  }

  // Restarted simplex refinement with shrinking initial steps.
  double step = 0.05;
  for (int round = 0; round < 8; ++round, step *= 0.1) {
    auto result = detail::nelder_mead(objective, best_x, step, 1e-32, 4000);
    if (result.value <= best_value) {
      best_value = result.value;
      best_x = result.x;
    }
    if (best_value < 1e-24) break;
  }

  // Phase alignment: each central coefficient is linear in exactly one
  // resource amplitude (A in C_-1, E in C_0, I in C_1), so rotating that
  // amplitude makes the coefficient real and positive.
  const double theta = best_x[0];
  const auto mag = resource_magnitudes(best_x[1], best_x[2]);
  const auto raw = coefficients_at(theta, mag);
  std::array<Amplitude, 3> c;
  for (std::size_t k = 0; k < 3; ++k) {
    const Amplitude phase = std::abs(raw[k]) > 0.0 ? std::conj(raw[k]) / std::abs(raw[k]) : 1.0;
    c[k] = mag[k] * phase;
  }
  EprResource epr(c[0], c[1], c[2]);
  ModeUnitary bs = beam_splitter(theta, 0.0);
  const auto final_coefficients =
      central_coefficients(decompose_outcomes(probe, epr, bs));
  ++evaluations;
  const double residual = aligned_residual(final_coefficients, target);

  if (!(residual < kBalancedResidualTolerance)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "balanced configuration not found for target " << target << ": best residual "
        << residual << " at transmission angle " << theta << " with |C| = (" << mag[0] << ", "
        << mag[1] << ", " << mag[2] << ") after " << evaluations << " evaluations";
    throw ConvergenceError(msg.str(), residual);
  }

  return BalancedConfiguration{
      std::move(bs),
      std::move(epr),
      {std::abs(final_coefficients[0]), std::abs(final_coefficients[1]),
       std::abs(final_coefficients[2])},
      residual,
      theta,
      evaluations};
}

}  // namespace fockoptics
