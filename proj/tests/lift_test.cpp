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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "fockoptics/basis.hpp"
#include "fockoptics/errors.hpp"
#include "oracles/oracles.hpp"

namespace fockoptics {
namespace {

using cd = std::complex<double>;

std::vector<int> to_counts(const Occupation& occ) {
  return {occ.counts().begin(), occ.counts().end()};
}

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

ModeUnitary balanced_bs() {
  const double h = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXcd m(2, 2);
  m << h, h, -h, h;
  return ModeUnitary(m);
}

TEST(ModeUnitary, RejectsNonUnitaryAndBadShape) {
  Eigen::MatrixXcd m(2, 2);
  m << 1, 1, 0, 1;
  EXPECT_THROW(ModeUnitary{m}, ValidationError);
  EXPECT_THROW(ModeUnitary{Eigen::MatrixXcd::Identity(4, 4)}, ValidationError);
  EXPECT_THROW(ModeUnitary{Eigen::MatrixXcd::Identity(2, 3)}, ValidationError);
  Eigen::MatrixXcd nearly = Eigen::MatrixXcd::Identity(2, 2);
  nearly(0, 0) += 1e-9;
  EXPECT_THROW(ModeUnitary{nearly}, ValidationError);
}

TEST(ModeUnitary, SpecialFlag) {
  EXPECT_TRUE(ModeUnitary::identity(3).is_special());
  Eigen::MatrixXcd swap(2, 2);
  swap << 0, 1, 1, 0;
  EXPECT_FALSE(ModeUnitary(swap).is_special());
  EXPECT_TRUE(balanced_bs().is_special());
}

TEST(LiftMatrix, MatchesPermanentOracle) {
  std::mt19937_64 rng(21);
  for (std::size_t dim : {2u, 3u}) {
    for (int trial = 0; trial < 5; ++trial) {
      const Eigen::MatrixXcd u = oracle::random_unitary_by_exp(static_cast<int>(dim), rng);
      const ModeUnitary mu(u);
      for (int n = 0; n <= 4; ++n) {
        const auto basis = sector_basis(dim, n);
        const Eigen::MatrixXcd lifted = lift_matrix(mu, n);
        ASSERT_EQ(lifted.rows(), static_cast<Eigen::Index>(basis.size()));
        for (std::size_t r = 0; r < basis.size(); ++r) {
          for (std::size_t c = 0; c < basis.size(); ++c) {
            const cd expected = oracle::lift_amplitude(u, to_counts(basis[r]), to_counts(basis[c]));
            EXPECT_NEAR(std::abs(lifted(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) - expected),
                        0.0, 1e-12)
                << "dim " << dim << " n " << n;
          }
        }
      }
    }
  }
}

TEST(LiftMatrix, OnePhotonSectorIsU) {
  std::mt19937_64 rng(22);
  for (std::size_t dim : {2u, 3u}) {
    const ModeUnitary u = random_unitary(dim, rng);
    EXPECT_LT(max_abs(lift_matrix(u, 1) - u.matrix()), 1e-14);
  }
}

TEST(LiftMatrix, VacuumSectorIsOne) {
  std::mt19937_64 rng(23);
  const Eigen::MatrixXcd v = lift_matrix(random_unitary(3, rng), 0);
  ASSERT_EQ(v.rows(), 1);
  EXPECT_EQ(v(0, 0), cd(1.0));
}

TEST(LiftMatrix, UnitaryAndHomomorphic) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 20; ++trial) {
    for (std::size_t dim : {2u, 3u}) {
      const ModeUnitary u1 = random_unitary(dim, rng), u2 = random_unitary(dim, rng);
      for (int n = 1; n <= 4; ++n) {
        const Eigen::MatrixXcd l1 = lift_matrix(u1, n);
        const auto id = Eigen::MatrixXcd::Identity(l1.rows(), l1.cols());
        EXPECT_LT(max_abs(l1.adjoint() * l1 - id), 1e-10);
        EXPECT_LT(max_abs(lift_matrix(u1 * u2, n) - l1 * lift_matrix(u2, n)), 1e-10);
      }
    }
  }
}

TEST(LiftMatrix, GlobalPhasePicksUpPhotonNumber) {
  std::mt19937_64 rng(25);
  const ModeUnitary u = random_unitary(3, rng);
  const double phi = 0.37;
  const ModeUnitary shifted(std::polar(1.0, phi) * u.matrix());
  for (int n = 0; n <= 4; ++n) {
    EXPECT_LT(max_abs(lift_matrix(shifted, n) - std::polar(1.0, n * phi) * lift_matrix(u, n)), 1e-12);
  }
}

TEST(LiftMatrix, PhotonCap) {
  const ModeUnitary id = ModeUnitary::identity(2);
  EXPECT_NO_THROW(lift_matrix(id, kMaxLiftPhotons));
  EXPECT_THROW(lift_matrix(id, kMaxLiftPhotons + 1), std::invalid_argument);
  EXPECT_THROW(lift_matrix(id, -1), std::invalid_argument);
}

TEST(ApplyModeUnitary, HongOuMandel) {
  const PureState out = apply_mode_unitary(balanced_bs(), PureState::basis(Occupation{1, 1}));
  EXPECT_LT(std::abs(out.amplitude(Occupation{1, 1})), 1e-12);
  EXPECT_NEAR(std::norm(out.amplitude(Occupation{2, 0})), 0.5, 1e-12);
  EXPECT_NEAR(std::norm(out.amplitude(Occupation{0, 2})), 0.5, 1e-12);
}

TEST(ApplyModeUnitary, HongOuMandelForAnyBalancedSpecialUnitary) {
  std::mt19937_64 rng(26);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  for (int trial = 0; trial < 20; ++trial) {
    const double h = 1.0 / std::sqrt(2.0);
    const cd p = std::polar(h, angle(rng)), q = std::polar(h, angle(rng));
    Eigen::MatrixXcd m(2, 2);
    m << p, q, -std::conj(q), std::conj(p);
    const PureState out = apply_mode_unitary(ModeUnitary(m), PureState::basis(Occupation{1, 1}));
    EXPECT_LT(std::abs(out.amplitude(Occupation{1, 1})), 1e-12);
  }
}

TEST(ApplyModeUnitary, SwapExchangesModes) {
  Eigen::MatrixXcd swap(2, 2);
  swap << 0, 1, 1, 0;
  const PureState out = apply_mode_unitary(ModeUnitary(swap), PureState::basis(Occupation{2, 1}));
  ASSERT_EQ(out.size(), 1u);
  EXPECT_NEAR(std::abs(out.amplitude(Occupation{1, 2}) - 1.0), 0.0, 1e-14);
}

TEST(ApplyModeUnitary, AgreesWithLiftMatrixAndConservesPhotons) {
  std::mt19937_64 rng(27);
  const ModeUnitary u = random_unitary(3, rng);
  PureState::Terms terms;
  for (const Occupation& occ : FockBasis::up_to(3, 3).states()) terms[occ] = oracle::random_complex(rng);
  const PureState in = PureState(3, terms).normalized();
  const PureState out = apply_mode_unitary(u, in);
  EXPECT_NEAR(out.norm(), 1.0, 1e-12);

  const auto in_sectors = total_photon_sectors(in);
  const auto out_sectors = total_photon_sectors(out);
  ASSERT_EQ(in_sectors.size(), out_sectors.size());
  for (const auto& [n, sector] : in_sectors) {
    const FockBasis basis = FockBasis::sector(3, n);
    const Eigen::VectorXcd expected = lift_matrix(u, n) * basis.to_vector(sector);
    EXPECT_LT((basis.to_vector(out_sectors.at(n)) - expected).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(out_sectors.at(n).norm_squared(), sector.norm_squared(), 1e-12);
  }
}

TEST(ApplyModeUnitary, OffsetActsOnLaterModes) {
  const PureState in = PureState::basis(Occupation{3, 1, 1});
  const PureState out = apply_mode_unitary(balanced_bs(), in, 1);
  for (const auto& [occ, amp] : out.terms()) EXPECT_EQ(occ[0], 3);
  EXPECT_LT(std::abs(out.amplitude(Occupation{3, 1, 1})), 1e-12);
  EXPECT_THROW(apply_mode_unitary(balanced_bs(), in, 2), std::out_of_range);
}

TEST(ApplyModeUnitary, RejectsUnnormalizedAndOversizedStates) {
  const PureState twice = cd(2.0) * vacuum(2);
  EXPECT_THROW(apply_mode_unitary(ModeUnitary::identity(2), twice), ValidationError);
  const PureState big = PureState::basis(Occupation{kMaxLiftPhotons + 1, 0});
  EXPECT_THROW(apply_mode_unitary(ModeUnitary::identity(2), big), std::invalid_argument);
}

TEST(RandomUnitary, HaarSamplesAreUnitaryAndSpecialWhenAsked) {
  std::mt19937_64 rng(28);
  for (int trial = 0; trial < 10; ++trial) {
    const ModeUnitary s = random_special_unitary(3, rng);
    EXPECT_TRUE(s.is_special());
    EXPECT_NEAR(std::abs(s.matrix().determinant() - 1.0), 0.0, 1e-12);
  }
}

}  // namespace
}  // namespace fockoptics
