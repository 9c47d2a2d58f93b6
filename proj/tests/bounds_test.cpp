#include <gtest/gtest.h>

#include <random>

#include "nuframe/bounds.hpp"
#include "nuframe/errors.hpp"
#include "nuframe/fixtures.hpp"
#include "oracles.hpp"

using namespace nuframe;

TEST(Bounds, EnvelopeSupNorm) {
  const SupNormEstimate s = envelope_sup_norm(fixtures::exam1(), 4096);
  EXPECT_NEAR(s.value, 2.0, 1e-9);
  EXPECT_EQ(s.grid, 4096);
  const SpectralLattice L = make_lattice(3, 1);
  const FrameSystem delta(std::vector<MatrixSeq>{MatrixSeq(L, 3, {{LatticePoint{0, 0}, CMatrix::Identity(3, 3)}})});
  EXPECT_NEAR(envelope_sup_norm(delta, 16).value, std::sqrt(3.0), 1e-14);
  for (int N : {1, 2, 5}) {
    const auto ce = fixtures::counterexample(N, 1, 1.0);
    EXPECT_NEAR(envelope_sup_norm(ce.system, 64).value, 2.0 * std::sqrt(N), 1e-12);
  }
  EXPECT_THROW(envelope_sup_norm(delta, 1), Error);
}

TEST(Bounds, SufficientBound) {
  EXPECT_EQ(bessel_sufficient_bound(8, 2, 2.0), 2048.0);
  EXPECT_EQ(bessel_sufficient_bound(1, 1, 1.0), 1.0);
  EXPECT_NEAR(bessel_sufficient_bound(2, 2, 2.0 * std::sqrt(2.0)), 64.0, 1e-12);
  EXPECT_THROW(bessel_sufficient_bound(0, 1, 1.0), Error);
  EXPECT_THROW(bessel_sufficient_bound(1, 1, 0.0), Error);
}

TEST(Bounds, NecessaryBounds) {
  const NecessaryBounds a = bessel_necessary_bounds(2, 2048.0);
  EXPECT_DOUBLE_EQ(a.proof_constant, 128.0);
  EXPECT_DOUBLE_EQ(a.stated_constant, 2050.0);
  const NecessaryBounds b = bessel_necessary_bounds(1, 1.0);
  EXPECT_DOUBLE_EQ(b.proof_constant, 2.0);
  EXPECT_DOUBLE_EQ(b.stated_constant, 2.0);
  EXPECT_THROW(bessel_necessary_bounds(1, -1.0), Error);
}

TEST(Bounds, Feasibility) {
  EXPECT_TRUE(feasibility(2, 1, 1));
  EXPECT_FALSE(feasibility(8, 2, 2));
  for (int N = 1; N < 6; ++N) EXPECT_FALSE(feasibility(2, 2, N));
  EXPECT_EQ(verdict_name(Verdict::BesselOnly), "bessel_only");
}

TEST(Bounds, OnbIsTightFrame) {
  const FrameBoundsReport r = frame_bounds_gamma(fixtures::onb_fixture(), 256);
  EXPECT_NEAR(r.a_est, 1.0, 1e-9);
  EXPECT_NEAR(r.b_est, 1.0, 1e-9);
  EXPECT_TRUE(r.feasible);
  EXPECT_EQ(r.verdict, Verdict::Frame);
  ASSERT_EQ(r.grid_x.size(), 256u);
  EXPECT_DOUBLE_EQ(r.grid_x.front(), 0.5 / (256 * 4));
  EXPECT_EQ(r.sigma_min_curve.size(), 256u);
}

TEST(Bounds, ExamIsRankDeficient) {
  const FrameSystem sys = fixtures::exam1();
  const FrameBoundsReport r = frame_bounds_gamma(sys, 256);
  EXPECT_FALSE(r.feasible);
  EXPECT_EQ(r.verdict, Verdict::RankDeficient);
  EXPECT_LE(r.a_est, 1e-10);
  EXPECT_LE(r.b_est, 2048.0);
  const SupNormEstimate s = envelope_sup_norm(sys, 1024);
  EXPECT_LE(r.b_est, bessel_sufficient_bound(sys.p(), sys.n(), s.value) + 1e-9);
  for (double v : r.sigma_min_curve) EXPECT_LE(v, 1e-10);
}

TEST(Bounds, CounterexampleRankDeficient) {
  const auto ce = fixtures::counterexample(3, 1, 1.0);
  const FrameBoundsReport r = frame_bounds_gamma(ce.system, 64);
  EXPECT_EQ(r.verdict, Verdict::RankDeficient);
  EXPECT_EQ(r.a_est, 0.0);
}

TEST(Bounds, SandwichOnRandomFrames) {
  std::mt19937_64 rng(51);
  for (auto [N, r] : {std::pair{1, 1}, {2, 1}}) {
    const SpectralLattice L = make_lattice(N, r);
    // 2p >= 4N n^2 with n = 1: p = 2N + 1 random envelopes.
    std::vector<MatrixSeq> envs;
    for (int j = 0; j < 2 * N + 1; ++j) envs.push_back(oracle::random_seq(rng, L, 1, 2, 3));
    const FrameSystem sys(std::move(envs));
    const FrameBoundsReport rep = frame_bounds_gamma(sys, 512);
    EXPECT_TRUE(rep.feasible);
    EXPECT_LE(rep.a_est, rep.b_est);
    for (int t = 0; t < 50; ++t) {
      const MatrixSeq f = oracle::random_seq(rng, L, 1, 6, 8);
      const double n2 = f.norm_squared(), fs = frame_sum(sys, f);
      EXPECT_GE(fs, rep.a_est * n2 - 1e-6 * n2);
      EXPECT_LE(fs, rep.b_est * n2 + 1e-6 * n2);
    }
    if (rep.verdict != Verdict::RankDeficient) {
      const SupNormEstimate s = envelope_sup_norm(sys, 1024);
      EXPECT_LE(s.value, 2.0 * std::sqrt(N * rep.b_est) + 1e-6);
    }
  }
}

TEST(Bounds, RefinementIsMonotone) {
  std::mt19937_64 rng(53);
  const SpectralLattice L = make_lattice(2, 1);
  std::vector<MatrixSeq> envs;
  for (int j = 0; j < 5; ++j) envs.push_back(oracle::random_seq(rng, L, 1, 3, 4));
  const FrameSystem sys(std::move(envs));
  const FrameBoundsReport r = frame_bounds_gamma_refined(sys, 16, 4);
  ASSERT_EQ(r.levels.size(), 5u);
  for (std::size_t i = 1; i < r.levels.size(); ++i) {
    EXPECT_EQ(r.levels[i].grid, 2 * r.levels[i - 1].grid);
    EXPECT_LE(r.levels[i].a_est, r.levels[i - 1].a_est);
    EXPECT_GE(r.levels[i].b_est, r.levels[i - 1].b_est);
  }
  EXPECT_EQ(r.a_est, r.levels.back().a_est);
  EXPECT_EQ(r.grid_x.size(), 256u);
}

TEST(Bounds, StepFormSystems) {
  // Step envelopes on all cells with unitary values: T(x) has a_est > 0 when feasible.
  const SpectralLattice L = make_lattice(1, 1);
  std::vector<SpectrumStep> envs;
  std::mt19937_64 rng(55);
  for (int j = 0; j < 2; ++j) {
    SpectrumStep S(L, 1, 1);
    for (std::size_t c = 0; c < S.cell_count(); ++c) S.set_value(c, oracle::random_matrix(rng, 1));
    envs.push_back(S);
  }
  const FrameBoundsReport r = frame_bounds_gamma(FrameSystem(envs), 32);
  EXPECT_TRUE(r.feasible);
  EXPECT_LE(r.a_est, r.b_est);
}

TEST(Bounds, ThreadCountDoesNotChangeResult) {
  const FrameSystem sys = fixtures::exam1();
  const FrameBoundsReport one = frame_bounds_gamma(sys, 128, 1);
  const FrameBoundsReport four = frame_bounds_gamma(sys, 128, 4);
  EXPECT_EQ(one.b_est, four.b_est);
  EXPECT_EQ(one.sigma_max_curve, four.sigma_max_curve);
  EXPECT_EQ(one.x_at_max, four.x_at_max);
}

TEST(Bounds, TooSmallGridRejected) { EXPECT_THROW(frame_bounds_gamma(fixtures::onb_fixture(), 4), Error); }
