#include <gtest/gtest.h>

#include <random>

#include "nuframe/errors.hpp"
#include "nuframe/fixtures.hpp"
#include "nuframe/gamma.hpp"
#include "oracles.hpp"

using namespace nuframe;

namespace {

const Complex kI{0.0, 1.0};

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(Gamma, PhaseVector) {
  const CVector e2 = phase_vector(make_lattice(2, 1), 0.0);
  const Complex want2[] = {1.0, kI, -1.0, -kI, 1.0, kI, -1.0, -kI};
  ASSERT_EQ(e2.size(), 8);
  for (int g = 0; g < 8; ++g) EXPECT_LT(std::abs(e2(g) - want2[g]), 1e-15);
  const CVector e1 = phase_vector(make_lattice(1, 1), 0.0);
  const Complex want1[] = {1.0, -1.0, 1.0, -1.0};
  for (int g = 0; g < 4; ++g) EXPECT_LT(std::abs(e1(g) - want1[g]), 1e-15);
  const SpectralLattice L = make_lattice(5, 3);
  const CVector e = phase_vector(L, 0.013);
  for (int g = 0; g < 20; ++g) {
    EXPECT_NEAR(std::abs(e(g)), 1.0, 1e-15);
    // Duplicated upper block agrees with re-evaluation at x + N/2.
    const double t = sample_point(L, 0.013, g);
    EXPECT_LT(std::abs(e(g) - std::polar(1.0, 4 * oracle::kPi * L.r() * t)), 1e-12);
  }
}

TEST(Gamma, SamplePoints) {
  const SpectralLattice L = make_lattice(2, 1);
  EXPECT_DOUBLE_EQ(sample_point(L, 0.01, 0), 0.01);
  EXPECT_DOUBLE_EQ(sample_point(L, 0.01, 3), 0.01 + 3.0 / 8);
  EXPECT_DOUBLE_EQ(sample_point(L, 0.01, 4), 0.01 + 1.0);
  EXPECT_DOUBLE_EQ(sample_point(L, 0.01, 7), 0.01 + 1.0 + 3.0 / 8);
}

TEST(Gamma, UpsilonOfExamEnvelopes) {
  const FrameSystem sys = fixtures::exam1();
  for (double x : {0.0, 0.04, 0.11}) {
    const CVector u1 = upsilon(sys, 0, 0, 0, x);
    for (int g = 0; g < 8; ++g) EXPECT_LT(std::abs(u1(g) - 1.0), 1e-14);
    const CVector u4 = upsilon(sys, 3, 0, 0, x);
    const Complex e = std::polar(1.0, 8 * oracle::kPi * x);
    for (int g = 0; g < 8; ++g) EXPECT_LT(std::abs(u4(g) - e * (g % 2 ? -1.0 : 1.0)), 1e-12);
  }
  EXPECT_EQ(g_vector(MatrixSeq(sys.lattice(), 2), 1, 1, 0.05), CVector::Zero(8));
}

TEST(Gamma, RangeChecks) {
  const FrameSystem sys = fixtures::exam1();
  for (double x : {-1e-9, 0.125, 0.3}) {
    try {
      gamma_matrix(sys, 0, 0, x);
      FAIL() << x;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::FrequencyOutOfRange);
    }
  }
  EXPECT_THROW(gamma_matrix(sys, 2, 0, 0.01), Error);
  EXPECT_THROW(upsilon(sys, 8, 0, 0, 0.01), Error);
}

TEST(Gamma, MatrixShapeAndColumns) {
  const FrameSystem sys = fixtures::exam1();
  const double x = 0.07;
  const CMatrix G = gamma_matrix(sys, 1, 0, x);
  ASSERT_EQ(G.rows(), 8);
  ASSERT_EQ(G.cols(), 16);
  const CVector E = phase_vector(sys.lattice(), x);
  for (int j = 0; j < 8; ++j) {
    const CVector u = upsilon(sys, j, 1, 0, x);
    EXPECT_EQ(G.col(2 * j), u);
    EXPECT_EQ(G.col(2 * j + 1), CVector(E.cwiseProduct(u)));
    for (int g = 0; g < 8; ++g) EXPECT_NEAR(std::abs(G(g, 2 * j + 1)), std::abs(G(g, 2 * j)), 1e-15);
  }
  const FrameSystem one(std::vector<MatrixSeq>{sys.time_envelopes()[0]});
  EXPECT_EQ(gamma_matrix(one, 0, 0, x).cols(), 2);
}

TEST(Gamma, OnbGramIsFourIdentity) {
  const FrameSystem sys = fixtures::onb_fixture();
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> xd(0.0, 0.25);
  for (int t = 0; t < 20; ++t) {
    const double x = xd(rng);
    const CMatrix G = gamma_matrix(sys, 0, 0, x);
    ASSERT_EQ(G.rows(), 4);
    ASSERT_EQ(G.cols(), 4);
    EXPECT_LT(max_abs(gamma_gram(sys, 0, 0, 0, 0, x) - 4.0 * CMatrix::Identity(4, 4)), 1e-12);
    EXPECT_LT(max_abs(oracle::gram_product(G, G) - 4.0 * CMatrix::Identity(4, 4)), 1e-12);
    const Eigen::VectorXd sv = singular_values(stacked_operator(sys, x));
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(sv(i), 2.0, 1e-12);
  }
}

TEST(Gamma, ExamGramDiagonalIsTwelve) {
  const FrameSystem sys = fixtures::exam1();
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> xd(0.0, 0.125);
  for (int t = 0; t < 16; ++t) {
    const double x = xd(rng);
    const CMatrix gram = gamma_gram(sys, 0, 0, 0, 0, x);
    for (int g = 0; g < 8; ++g) EXPECT_NEAR(std::abs(gram(g, g) - 12.0), 0.0, 1e-12);
  }
}

TEST(Gamma, GramMatchesExplicitProduct) {
  std::mt19937_64 rng(5);
  const FrameSystem sys = fixtures::exam1();
  std::uniform_real_distribution<double> xd(0.0, 0.125);
  for (int t = 0; t < 10; ++t) {
    const double x = xd(rng);
    const int m = t % 2, k = (t / 2) % 2, m2 = (t / 3) % 2, k2 = (t / 5) % 2;
    const CMatrix A = gamma_matrix(sys, m, k, x), B = gamma_matrix(sys, m2, k2, x);
    const CMatrix gram = gamma_gram(sys, m, k, m2, k2, x);
    EXPECT_LT(max_abs(gram - oracle::gram_product(A, B)), 1e-12);
    const CMatrix self = gamma_gram(sys, m, k, m, k, x);
    EXPECT_LT(max_abs(self - self.adjoint()), 1e-13);
    EXPECT_GE(Eigen::SelfAdjointEigenSolver<CMatrix>(self).eigenvalues().minCoeff(), -1e-10);
    double trace_oracle = 0.0;
    for (int j = 0; j < sys.p(); ++j)
      for (int g = 0; g < 8; ++g)
        trace_oracle += 2.0 * std::norm(sys.envelope_spectrum(j, sample_point(sys.lattice(), x, g))(m, k));
    EXPECT_NEAR(self.trace().real(), trace_oracle, 1e-12 * trace_oracle);
  }
}

TEST(Gamma, StackedOperatorBlocks) {
  const FrameSystem sys = fixtures::exam1();
  const double x = 0.021;
  const CMatrix T = stacked_operator(sys, x);
  ASSERT_EQ(T.rows(), 16);
  ASSERT_EQ(T.cols(), 32);
  for (int m = 0; m < 2; ++m)
    for (int k = 0; k < 2; ++k) EXPECT_EQ(T.middleCols((m * 2 + k) * 8, 8), gamma_matrix(sys, m, k, x).adjoint());
  const Eigen::VectorXd sv = singular_values(T);
  EXPECT_EQ(sv.size(), 16);
  const FrameSystem one(std::vector<MatrixSeq>{fixtures::onb_fixture().time_envelopes()[0]});
  EXPECT_EQ(stacked_operator(one, 0.1).rows(), 2);
  EXPECT_EQ(stacked_operator(one, 0.1).cols(), 4);
}

TEST(Gamma, StackingConsistency) {
  std::mt19937_64 rng(7);
  const FrameSystem sys = fixtures::exam1();
  std::uniform_real_distribution<double> xd(0.0, 0.125);
  for (int t = 0; t < 20; ++t) {
    const MatrixSeq f = oracle::random_seq(rng, sys.lattice(), 2);
    const double x = xd(rng);
    const CVector direct = stacked_operator(sys, x) * stacked_signal(f, x);
    CVector blockwise = CVector::Zero(16);
    for (int m = 0; m < 2; ++m)
      for (int k = 0; k < 2; ++k) blockwise += gamma_matrix(sys, m, k, x).adjoint() * g_vector(f, m, k, x);
    EXPECT_NEAR(direct.squaredNorm(), blockwise.squaredNorm(), 1e-12 * std::max(1.0, direct.squaredNorm()));
  }
}

TEST(Gamma, StepSpectrumSampling) {
  const auto ce = fixtures::counterexample(2, 1, 0.5);
  const double x = 0.03;
  const CVector g = g_vector(ce.test_spectrum, 0, 0, x);
  for (int s = 0; s < 8; ++s) {
    const double t = sample_point(ce.system.lattice(), x, s);
    EXPECT_EQ(g(s), ce.test_spectrum.eval(t)(0, 0));
  }
  EXPECT_EQ(g(0), Complex(1.0));
  EXPECT_EQ(g(1), Complex(2.0));
  EXPECT_EQ(g(2), Complex(0.0));
  EXPECT_EQ(upsilon(ce.system, 1, 0, 1, x)(0), Complex(2.0));
}

TEST(Gamma, ChiSum) {
  const SpectralLattice L = make_lattice(3, 1);
  const MatrixSeq delta(L, 2, {{LatticePoint{0, 0}, CMatrix::Identity(2, 2)}});
  const FrameSystem sys(std::vector<MatrixSeq>{delta});
  EXPECT_LT(std::abs(chi_sum(sys, delta, 0, 0.2) - 4.0), 1e-15);
  EXPECT_EQ(chi_sum(sys, MatrixSeq(L, 2), 0, 0.2), Complex(0.0));
  std::mt19937_64 rng(9);
  const MatrixSeq a = oracle::random_seq(rng, L, 2), b = oracle::random_seq(rng, L, 2);
  const Complex ab = chi_sum(FrameSystem(std::vector<MatrixSeq>{b}), a, 0, 0.31);
  const Complex ba = chi_sum(FrameSystem(std::vector<MatrixSeq>{a}), b, 0, 0.31);
  EXPECT_LT(std::abs(ab - std::conj(ba)), 1e-12);
}

TEST(Gamma, IdentityResidual) {
  std::mt19937_64 rng(13);
  const FrameSystem onb = fixtures::onb_fixture();
  for (int t = 0; t < 10; ++t) EXPECT_LE(identity_residual(onb, oracle::random_seq(rng, onb.lattice(), 1), 64), 1e-9);
  const FrameSystem exam = fixtures::exam1();
  EXPECT_LE(identity_residual(exam, exam.time_envelopes()[2], 128), 1e-8);
  EXPECT_EQ(identity_residual(exam, MatrixSeq(exam.lattice(), 2), 16), 0.0);
  for (auto [N, r] : {std::pair{3, 1}, {5, 3}}) {
    const SpectralLattice L = make_lattice(N, r);
    std::vector<MatrixSeq> envs;
    for (int j = 0; j < 3; ++j) envs.push_back(oracle::random_seq(rng, L, 2, 2, 3));
    const FrameSystem sys(std::move(envs));
    EXPECT_LE(identity_residual(sys, oracle::random_seq(rng, L, 2), 128), 1e-8);
  }
}

TEST(Gamma, SingularValuesAgainstJacobiSvd) {
  std::mt19937_64 rng(15);
  for (auto [r, c] : {std::pair{3, 7}, {7, 3}, {5, 5}}) {
    CMatrix A(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) A(i, j) = oracle::random_matrix(rng, 1)(0, 0);
    const Eigen::VectorXd sv = singular_values(A);
    const Eigen::VectorXd ref = Eigen::JacobiSVD<CMatrix>(A).singularValues();
    ASSERT_EQ(sv.size(), ref.size());
    for (int i = 0; i < sv.size(); ++i) EXPECT_NEAR(sv(i), ref(i), 1e-10);
  }
  CMatrix rank1 = CVector::Ones(4) * CVector::Ones(3).transpose();
  const Eigen::VectorXd sv = singular_values(rank1);
  EXPECT_NEAR(sv(0), std::sqrt(12.0), 1e-12);
  EXPECT_EQ(sv(1), 0.0);
  EXPECT_EQ(sv(2), 0.0);
}
