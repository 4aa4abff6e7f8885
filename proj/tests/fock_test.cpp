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
#include <random>

#include <gtest/gtest.h>

#include "fockoptics/basis.hpp"
#include "fockoptics/errors.hpp"
#include "oracles/oracles.hpp"

namespace fockoptics {
namespace {

const double kSqrt2 = std::sqrt(2.0);

PureState random_state(std::size_t modes, int max_total, std::mt19937_64& rng) {
  PureState::Terms terms;
  for (const auto& occ : FockBasis::up_to(modes, max_total).states()) {
    terms[occ] = oracle::random_complex(rng);
  }
  return PureState(modes, std::move(terms));
}

TEST(Occupation, RejectsNegativeCounts) {
  EXPECT_THROW(Occupation({1, -1}), std::invalid_argument);
  EXPECT_EQ(Occupation({3, 1, 2}).total(), 6);
}

TEST(Occupation, OrdersLexicographically) {
  EXPECT_LT(Occupation({0, 2}), Occupation({1, 0}));
  EXPECT_LT(Occupation({1, 0}), Occupation({1, 1}));
}

TEST(Vacuum, SingleUnitTerm) {
  const PureState v2 = vacuum(2);
  ASSERT_EQ(v2.size(), 1u);
  EXPECT_EQ(v2.amplitude(Occupation{0, 0}), Amplitude(1.0));
  EXPECT_EQ(v2.norm(), 1.0);
  EXPECT_TRUE(v2.is_normalized());

  const PureState v3 = vacuum(3);
  ASSERT_EQ(v3.size(), 1u);
  EXPECT_EQ(v3.amplitude(Occupation{0, 0, 0}), Amplitude(1.0));
}

TEST(Vacuum, ZeroModesRejected) { EXPECT_THROW(vacuum(0), std::invalid_argument); }

TEST(Create, OnVacuum) {
  const PureState s = create(vacuum(2), 0);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.amplitude(Occupation{1, 0}), Amplitude(1.0));
}

TEST(Create, BosonicFactorMatchesTruncatedMatrix) {
  // a^dagger |1> = sqrt(2) |2>; the dense truncated matrix gives the same entry.
  const auto adag = oracle::creation_matrix(4);
  const PureState s = create(PureState::basis(Occupation{1, 0}), 0);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_NEAR(s.amplitude(Occupation{2, 0}).real(), kSqrt2, 1e-15);
  EXPECT_NEAR(s.amplitude(Occupation{2, 0}).real(), adag(2, 1), 1e-15);
}

TEST(Create, TwiceThenNormalize) {
  const PureState s = create(create(vacuum(2), 0), 0).normalized();
  ASSERT_EQ(s.size(), 1u);
  EXPECT_NEAR(std::abs(s.amplitude(Occupation{2, 0}) - 1.0), 0.0, 1e-15);
}

TEST(Create, ModeOutOfRange) { EXPECT_THROW(create(vacuum(2), 2), std::out_of_range); }

TEST(Annihilate, VacuumVanishes) { EXPECT_TRUE(annihilate(vacuum(2), 0).empty()); }

TEST(Annihilate, BosonicFactorMatchesTruncatedMatrix) {
  const Eigen::MatrixXd a = oracle::creation_matrix(4).transpose();
  const PureState s = annihilate(PureState::basis(Occupation{2, 0}), 0);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_NEAR(s.amplitude(Occupation{1, 0}).real(), kSqrt2, 1e-15);
  EXPECT_NEAR(s.amplitude(Occupation{1, 0}).real(), a(1, 2), 1e-15);
}

TEST(Annihilate, UndoesCreate) {
  const PureState s = annihilate(create(vacuum(2), 0), 0);
  EXPECT_EQ(s.terms(), vacuum(2).terms());
}

TEST(Annihilate, ModeOutOfRange) { EXPECT_THROW(annihilate(vacuum(3), 5), std::out_of_range); }

TEST(InnerProduct, Examples) {
  EXPECT_EQ(inner_product(vacuum(2), vacuum(2)), Amplitude(1.0));
  EXPECT_EQ(inner_product(PureState::basis(Occupation{1, 0}), PureState::basis(Occupation{0, 1})),
            Amplitude(0.0));
  const double h = 1.0 / kSqrt2;
  const PureState psi(2, {{Occupation{1, 0}, h}, {Occupation{0, 1}, Amplitude(0.0, h)}});
  EXPECT_NEAR(std::abs(inner_product(psi, psi) - 1.0), 0.0, 1e-15);
}

TEST(InnerProduct, ModeMismatch) {
  EXPECT_THROW(inner_product(vacuum(2), vacuum(3)), std::invalid_argument);
}

TEST(InnerProduct, ConjugateSymmetricAndPositive) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const PureState a = random_state(3, 3, rng), b = random_state(3, 3, rng);
    const Amplitude ab = inner_product(a, b), ba = inner_product(b, a);
    EXPECT_NEAR(std::abs(ab - std::conj(ba)), 0.0, 1e-12);
    const Amplitude aa = inner_product(a, a);
    EXPECT_GT(aa.real(), 0.0);
    EXPECT_EQ(aa.imag(), 0.0);
  }
}

TEST(LadderAlgebra, CreateAnnihilateAreAdjoint) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    const PureState a = random_state(2, 5, rng), b = random_state(2, 5, rng);
    for (std::size_t k = 0; k < 2; ++k) {
      const Amplitude lhs = inner_product(a, create(b, k));
      const Amplitude rhs = inner_product(annihilate(a, k), b);
      EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-12);
    }
  }
}

TEST(LadderAlgebra, CanonicalCommutatorOnEveryBasisState) {
  for (const Occupation& occ : FockBasis::up_to(3, 6).states()) {
    const PureState ket = PureState::basis(occ);
    for (std::size_t k = 0; k < 3; ++k) {
      const PureState comm = annihilate(create(ket, k), k) - create(annihilate(ket, k), k);
      ASSERT_EQ(comm.size(), 1u);
      EXPECT_NEAR(std::abs(comm.amplitude(occ) - 1.0), 0.0, 1e-12);
    }
  }
}

TEST(PureState, PrunesTinyAmplitudes) {
  const PureState s(2, {{Occupation{1, 0}, 1e-15}, {Occupation{0, 1}, 1.0}});
  EXPECT_EQ(s.size(), 1u);
  const PureState zero = PureState::basis(Occupation{1, 0}) - PureState::basis(Occupation{1, 0});
  EXPECT_TRUE(zero.empty());
}

TEST(PureState, RejectsWrongLength) {
  EXPECT_THROW(PureState(2, {{Occupation{1, 0, 0}, 1.0}}), std::invalid_argument);
}

TEST(PureState, NormalizingZeroThrows) {
  EXPECT_THROW(PureState(2).normalized(), ValidationError);
}

TEST(Sectors, Example) {
  const Amplitude c1(0.5, 0.1), c2(-0.3, 0.0), c3(0.0, 0.7);
  const PureState s(2, {{Occupation{1, 1}, c1}, {Occupation{2, 0}, c2}, {Occupation{0, 0}, c3}});
  const auto sectors = total_photon_sectors(s);
  ASSERT_EQ(sectors.size(), 2u);
  EXPECT_EQ(sectors.at(2).terms(),
            (PureState::Terms{{Occupation{1, 1}, c1}, {Occupation{2, 0}, c2}}));
  EXPECT_EQ(sectors.at(0).terms(), (PureState::Terms{{Occupation{0, 0}, c3}}));
}

TEST(Sectors, VacuumAndSingleSector) {
  const auto v = total_photon_sectors(vacuum(2));
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v.at(0).terms(), vacuum(2).terms());

  const PureState s(3, {{Occupation{1, 1, 0}, 1.0}, {Occupation{0, 0, 2}, 1.0}});
  EXPECT_EQ(total_photon_sectors(s).size(), 1u);
}

TEST(Sectors, FormAPartition) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const PureState s = random_state(3, 4, rng);
    PureState::Terms rebuilt;
    for (const auto& [n, sector] : total_photon_sectors(s)) {
      for (const auto& [occ, amp] : sector.terms()) {
        EXPECT_EQ(occ.total(), n);
        EXPECT_TRUE(rebuilt.emplace(occ, amp).second) << "sectors overlap";
      }
    }
    EXPECT_EQ(rebuilt, s.terms());
  }
}

}  // namespace
}  // namespace fockoptics
