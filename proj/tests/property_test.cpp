#include <gtest/gtest.h>

#include <random>

#include "nuframe/fixtures.hpp"
#include "nuframe/frame.hpp"
#include "oracles.hpp"

using namespace nuframe;

namespace {

const std::vector<std::pair<int, int>> kLattices = {{1, 1}, {2, 1}, {3, 1}, {5, 3}, {4, 7}};

SpectralLattice pick(std::mt19937_64& rng) {
  const auto [N, r] = kLattices[std::uniform_int_distribution<std::size_t>(0, kLattices.size() - 1)(rng)];
  return make_lattice(N, r);
}

MatrixSeq random_signal(std::mt19937_64& rng, const SpectralLattice& L) {
  const int n = std::uniform_int_distribution<int>(1, 3)(rng);
  const int pts = std::uniform_int_distribution<int>(1, 12)(rng);
  return oracle::random_seq(rng, L, n, 6, pts);
}

}  // namespace

TEST(Property, ScalarSumSquareBound) {
  std::mt19937_64 rng(101);
  std::normal_distribution<double> nd;
  std::uniform_int_distribution<int> td(1, 10);
  for (int trial = 0; trial < 500; ++trial) {
    const int t = td(rng);
    Complex sum = 0.0;
    double sq = 0.0;
    for (int i = 0; i < t; ++i) {
      const Complex w(nd(rng), nd(rng));
      sum += w;
      sq += std::norm(w);
    }
    EXPECT_LE(std::norm(sum), std::ldexp(sq, t - 1) * (1 + 1e-15));
  }
}

TEST(Property, Plancherel) {
  std::mt19937_64 rng(103);
  for (int t = 0; t < 200; ++t) {
    const MatrixSeq f = random_signal(rng, pick(rng));
    const double n2 = f.norm_squared();
    EXPECT_LE(std::abs(n2 - oracle::plancherel_norm2(f, 64)) / n2, 1e-8);
  }
}

TEST(Property, ParsevalAndConjugateSymmetry) {
  std::mt19937_64 rng(107);
  for (int t = 0; t < 200; ++t) {
    const SpectralLattice L = pick(rng);
    const int n = 1 + t % 3;
    const MatrixSeq f = oracle::random_seq(rng, L, n, 6, 1 + t % 12);
    const MatrixSeq g = oracle::random_seq(rng, L, n, 6, 1 + (t * 7) % 12);
    const Complex fg = inner_time(f, g), gf = inner_time(g, f);
    EXPECT_LE(std::abs(fg - std::conj(gf)), 1e-12);
    const double scale = std::sqrt(f.norm_squared() * g.norm_squared());
    EXPECT_LE(std::abs(fg - oracle::plancherel_inner(f, g, 64)) / scale, 1e-8);
  }
}

TEST(Property, ModulationIdentity) {
  std::mt19937_64 rng(109);
  std::uniform_real_distribution<double> xd(0.0, 1.0);
  std::uniform_int_distribution<int> ld(-4, 4), sd(0, 1);
  for (int t = 0; t < 200; ++t) {
    const SpectralLattice L = pick(rng);
    const MatrixSeq f = random_signal(rng, L);
    const LatticePoint q{sd(rng), ld(rng)};
    const double lam = lambda_value(q, L).to_double();
    const MatrixSeq d = displace(f, q);
    EXPECT_EQ(d.support_size(), f.support_size());
    EXPECT_NEAR(d.norm_squared(), f.norm_squared(), 1e-12 * f.norm_squared());
    for (int k = 0; k < 5; ++k) {
      const double x = xd(rng);
      const CMatrix lhs = fourier_eval(d, x);
      const CMatrix rhs = std::polar(1.0, 4 * oracle::kPi * L.N() * lam * x) * fourier_eval(f, x);
      EXPECT_LE((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12 * std::max(1.0, rhs.cwiseAbs().maxCoeff()));
    }
  }
}

TEST(Property, DisplacementComposesWhenSumInLattice) {
  std::mt19937_64 rng(113);
  std::uniform_int_distribution<int> ld(-4, 4), sd(0, 1);
  for (int t = 0; t < 200; ++t) {
    const SpectralLattice L = pick(rng);
    const MatrixSeq f = random_signal(rng, L);
    const LatticePoint q1{sd(rng), ld(rng)}, q2{sd(rng), ld(rng)};
    const auto q = lambda_sum(q1, q2, L);
    if (!q) continue;
    EXPECT_EQ(displace(displace(f, q1), q2), displace(f, *q));
  }
}

TEST(Property, FrameSumMatchesAnalysisAndScales) {
  std::mt19937_64 rng(127);
  std::normal_distribution<double> nd;
  for (int t = 0; t < 60; ++t) {
    const SpectralLattice L = pick(rng);
    const int n = 1 + t % 2;
    std::vector<MatrixSeq> envs;
    for (int j = 0; j < 1 + t % 4; ++j) envs.push_back(oracle::random_seq(rng, L, n, 3, 4));
    const FrameSystem sys(std::move(envs));
    const MatrixSeq f = oracle::random_seq(rng, L, n, 5, 6);
    const double fs = frame_sum(sys, f);
    EXPECT_NEAR(fs, analysis(sys, f, 1).table.norm_squared(), 1e-12 * std::max(1.0, fs));
    EXPECT_NEAR(fs, oracle::brute_frame_sum(sys, f, 12), 1e-10 * std::max(1.0, fs));
    const Complex alpha(nd(rng), nd(rng));
    EXPECT_NEAR(frame_sum(sys, alpha * f), std::norm(alpha) * fs, 1e-12 * std::norm(alpha) * std::max(1.0, fs));
    const Complex q = inner_time(frame_operator_apply(sys, f, 1).value, f);
    EXPECT_NEAR(q.real(), fs, 1e-10 * std::max(1.0, fs));
  }
}

TEST(Property, OnbRatioIsOne) {
  std::mt19937_64 rng(131);
  const FrameSystem sys = fixtures::onb_fixture();
  for (int t = 0; t < 100; ++t) {
    const MatrixSeq f = oracle::random_seq(rng, sys.lattice(), 1, 8, 1 + t % 12);
    EXPECT_NEAR(frame_sum(sys, f) / f.norm_squared(), 1.0, 1e-12);
  }
}
