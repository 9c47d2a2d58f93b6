#include "nuframe/fixtures.hpp"

#include <cmath>

namespace nuframe::fixtures {

namespace {

const Complex I1(0.0, 1.0);

CMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
  CMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

MatrixSeq two_point(const SpectralLattice& L, LatticePoint p0, CMatrix m0, LatticePoint p1, CMatrix m1) {
  MatrixSeq::Entries e;
  e.emplace(p0, std::move(m0));
  e.emplace(p1, std::move(m1));
  return MatrixSeq(L, 2, std::move(e));
}

struct Pair {
  CMatrix first;
  CMatrix second;
};

FrameSystem from_pairs(const std::vector<Pair>& pairs) {
  const SpectralLattice L(2, 1);
  // lambda = 0, 4 is (s=0, l=0), (0, 2); lambda = 1/2, 1/2 + 4 is (1, 0), (1, 2).
  std::vector<MatrixSeq> envs;
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    const int s = j < 4 ? 0 : 1;
    envs.push_back(two_point(L, {s, 0}, pairs[j].first, {s, 2}, pairs[j].second));
  }
  return FrameSystem(std::move(envs));
}

}  // namespace

FrameSystem exam1() {
  const CMatrix id = mat2(1, 0, 0, 1);
  const CMatrix sx = mat2(0, 1, 1, 0);
  const CMatrix sz = mat2(1, 0, 0, -1);
  const CMatrix sy = mat2(0, -I1, I1, 0);
  const CMatrix sy_neg = mat2(0, I1, -I1, 0);
  return from_pairs({{id, sx}, {sz, sy}, {sy_neg, sx}, {sx, sz}, {id, sx}, {sz, sy}, {sy_neg, sx}, {sx, sz}});
}

FrameSystem exam1_perturbed() {
  const double t = 24.0 / 25.0;
  const CMatrix sx = mat2(0, 1, 1, 0);
  const CMatrix sz = mat2(1, 0, 0, -1);
  const CMatrix sy = mat2(0, -I1, I1, 0);
  const std::vector<Pair> pairs = {
      {mat2(-t, 0, 0, -t), -sx},
      {mat2(-t, 0, 0, t), -sy},
      {mat2(0, -t * I1, -t * I1, 0), -sx},
      {mat2(0, -t, -t, 0), -sz},
      {mat2(-1, 0, 0, -1), -sx},
      {-sz, -sy},
      {sy, -sx},
      {-sx, -sz},
  };
  return from_pairs(pairs);
}

Counterexample counterexample(int N, int r, double a0) {
  const SpectralLattice L(N, r);
  const double amp = std::sqrt(2.0 * N);
  SpectrumStep env1(L, 2, 1), env2(L, 2, 1), test(L, 2, 1);
  env1.set_value(0, mat2(amp, 0, 0, amp));
  env2.set_value(0, mat2(0, amp, amp, 0));
  test.set_value(0, mat2(1, 1, 1, 1));
  const double b = 1.0 / a0;
  test.set_value(1, mat2(b, b, b, b));
  return {FrameSystem(std::vector<SpectrumStep>{env1, env2}), test};
}

FrameSystem onb_fixture() {
  const SpectralLattice L(1, 1);
  CMatrix one(1, 1);
  one(0, 0) = 1.0;
  // lambda = 0 is (0, 0); lambda = 1 = r/N is (1, 0).
  return FrameSystem(std::vector<MatrixSeq>{MatrixSeq(L, 1, {{LatticePoint{0, 0}, one}}),
                                            MatrixSeq(L, 1, {{LatticePoint{1, 0}, one}})});
}

std::vector<std::string> names() { return {"exam1", "exam1-perturbed", "counterexample", "onb"}; }

}  // namespace nuframe::fixtures
