#include "nuframe/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "nuframe/errors.hpp"
#include "nuframe/quadrature.hpp"

namespace nuframe {

namespace {

void require_base_interval(const SpectralLattice& L, double x) {
  if (!(x >= 0.0 && x < L.base_width()))
    throw Error(ErrorCode::FrequencyOutOfRange,
                "x=" + std::to_string(x) + " is outside [0, 1/(4N)) = [0, " + std::to_string(L.base_width()) + ")");
}

void require_entry(int n, int m, int k) {
  if (m < 0 || m >= n || k < 0 || k >= n)
    throw Error(ErrorCode::ShapeMismatch, "entry (" + std::to_string(m) + "," + std::to_string(k) +
                                              ") outside an " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
}

using Sampler = std::function<CMatrix(int slot)>;

Sampler time_sampler(const MatrixSeq& f, double x) {
  return [&f, x](int slot) { return fourier_eval(f, sample_point(f.lattice(), x, slot)); };
}

// Index arithmetic instead of re-locating floating sample points keeps step lookups exact
// at cell boundaries.
Sampler step_sampler(const SpectrumStep& F, double x) {
  return [&F, x](int slot) {
    const int N = F.lattice().N();
    const int K = F.refinement();
    auto sub = static_cast<int>(std::floor(x * 4.0 * N * K));
    sub = std::clamp(sub, 0, K - 1);
    const bool upper = slot >= 2 * N;
    const int g = upper ? slot - 2 * N : slot;
    const std::size_t idx = static_cast<std::size_t>((upper ? 2 * N * K : 0) + g * K + sub);
    return F.value(idx);
  };
}

Sampler envelope_sampler(const FrameSystem& sys, int j, double x) {
  if (sys.is_spectral()) return step_sampler(sys.spectral_envelopes().at(static_cast<std::size_t>(j)), x);
  return time_sampler(sys.time_envelopes().at(static_cast<std::size_t>(j)), x);
}

/// samples[slot] = full matrix at that slot.
std::vector<CMatrix> sample_all(const Sampler& s, int slots) {
  std::vector<CMatrix> out;
  out.reserve(static_cast<std::size_t>(slots));
  for (int g = 0; g < slots; ++g) out.push_back(s(g));
  return out;
}

CVector entry_column(const std::vector<CMatrix>& samples, int m, int k) {
  CVector v(static_cast<Eigen::Index>(samples.size()));
  for (std::size_t g = 0; g < samples.size(); ++g) v(static_cast<Eigen::Index>(g)) = samples[g](m, k);
  return v;
}

CVector stack_blocks(const std::vector<CMatrix>& samples, int n) {
  const auto slots = static_cast<Eigen::Index>(samples.size());
  CVector out(slots * n * n);
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < n; ++k) out.segment((m * n + k) * slots, slots) = entry_column(samples, m, k);
  return out;
}

CMatrix gamma_from_samples(const std::vector<std::vector<CMatrix>>& per_env, const CVector& phase, int m, int k) {
  const auto rows = phase.size();
  CMatrix G(rows, static_cast<Eigen::Index>(2 * per_env.size()));
  for (std::size_t j = 0; j < per_env.size(); ++j) {
    const CVector ups = entry_column(per_env[j], m, k);
    G.col(static_cast<Eigen::Index>(2 * j)) = ups;
    G.col(static_cast<Eigen::Index>(2 * j + 1)) = phase.cwiseProduct(ups);
  }
  return G;
}

std::vector<std::vector<CMatrix>> sample_envelopes(const FrameSystem& sys, double x) {
  const int slots = 4 * sys.lattice().N();
  std::vector<std::vector<CMatrix>> per_env;
  per_env.reserve(static_cast<std::size_t>(sys.p()));
  for (int j = 0; j < sys.p(); ++j) per_env.push_back(sample_all(envelope_sampler(sys, j, x), slots));
  return per_env;
}

}  // namespace

double sample_point(const SpectralLattice& L, double x, int slot) noexcept {
  const int twoN = 2 * L.N();
  const double w = L.base_width();
  if (slot < twoN) return x + slot * w;
  return x + 0.5 * L.N() + (slot - twoN) * w;
}

CVector phase_vector(const SpectralLattice& L, double x) {
  const int twoN = 2 * L.N();
  CVector E(2 * twoN);
  for (int g = 0; g < twoN; ++g) {
    // 4 pi r (x + g/4N) = 4 pi r x + pi r g / N
    const double angle = 4.0 * std::numbers::pi * L.r() * x + std::numbers::pi * L.r() * g / L.N();
    E(g) = std::polar(1.0, angle);
  }
  E.tail(twoN) = E.head(twoN);
  return E;
}

CVector upsilon(const FrameSystem& sys, int j, int m, int k, double x) {
  require_base_interval(sys.lattice(), x);
  require_entry(sys.n(), m, k);
  if (j < 0 || j >= sys.p()) throw Error(ErrorCode::ShapeMismatch, "envelope index out of range");
  return entry_column(sample_all(envelope_sampler(sys, j, x), 4 * sys.lattice().N()), m, k);
}

CVector g_vector(const MatrixSeq& f, int m, int k, double x) {
  require_base_interval(f.lattice(), x);
  require_entry(f.n(), m, k);
  return entry_column(sample_all(time_sampler(f, x), 4 * f.lattice().N()), m, k);
}

CVector g_vector(const SpectrumStep& F, int m, int k, double x) {
  require_base_interval(F.lattice(), x);
  require_entry(F.n(), m, k);
  return entry_column(sample_all(step_sampler(F, x), 4 * F.lattice().N()), m, k);
}

CVector stacked_signal(const MatrixSeq& f, double x) {
  require_base_interval(f.lattice(), x);
  return stack_blocks(sample_all(time_sampler(f, x), 4 * f.lattice().N()), f.n());
}

CVector stacked_signal(const SpectrumStep& F, double x) {
  require_base_interval(F.lattice(), x);
  return stack_blocks(sample_all(step_sampler(F, x), 4 * F.lattice().N()), F.n());
}

CMatrix gamma_matrix(const FrameSystem& sys, int m, int k, double x) {
  require_base_interval(sys.lattice(), x);
  require_entry(sys.n(), m, k);
  return gamma_from_samples(sample_envelopes(sys, x), phase_vector(sys.lattice(), x), m, k);
}

CMatrix gamma_gram(const FrameSystem& sys, int m, int k, int m2, int k2, double x) {
  require_base_interval(sys.lattice(), x);
  require_entry(sys.n(), m, k);
  require_entry(sys.n(), m2, k2);
  const auto per_env = sample_envelopes(sys, x);
  const CVector E = phase_vector(sys.lattice(), x);
  return gamma_from_samples(per_env, E, m, k) * gamma_from_samples(per_env, E, m2, k2).adjoint();
}

CMatrix stacked_operator(const FrameSystem& sys, double x) {
  require_base_interval(sys.lattice(), x);
  const int n = sys.n();
  const Eigen::Index slots = 4 * sys.lattice().N();
  const auto per_env = sample_envelopes(sys, x);
  const CVector E = phase_vector(sys.lattice(), x);
  CMatrix T(2 * sys.p(), slots * n * n);
  for (int m = 0; m < n; ++m)
    for (int k = 0; k < n; ++k) T.middleCols((m * n + k) * slots, slots) = gamma_from_samples(per_env, E, m, k).adjoint();
  return T;
}

Complex chi_sum(const FrameSystem& sys, const MatrixSeq& f, int j, double x) {
  if (!(sys.lattice() == f.lattice()) || sys.n() != f.n())
    throw Error(ErrorCode::MixedLattice, "signal and system live on different spaces");
  const double upper = x + 0.5 * sys.lattice().N();
  return frobenius_inner(fourier_eval(f, x), sys.envelope_spectrum(j, x)) +
         frobenius_inner(fourier_eval(f, upper), sys.envelope_spectrum(j, upper));
}

double identity_residual(const FrameSystem& sys, const MatrixSeq& f, int nodes) {
  const double lhs = 4.0 * sys.lattice().N() * frame_sum(sys, f);
  const QuadratureRule rule = gauss_legendre(nodes, 0.0, sys.lattice().base_width());
  double rhs = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    rhs += rule.weights[i] * (stacked_operator(sys, x) * stacked_signal(f, x)).squaredNorm();
  }
  return std::abs(lhs - rhs) / std::max(1.0, lhs);
}

Eigen::VectorXd singular_values(const CMatrix& A) {
  const CMatrix gram = A.rows() <= A.cols() ? CMatrix(A * A.adjoint()) : CMatrix(A.adjoint() * A);
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(gram, Eigen::EigenvaluesOnly);
  Eigen::VectorXd ev = solver.eigenvalues();  // ascending
  // Eigenvalues within the solver tolerance of zero are zero.
  const double floor = 1e-12 * std::max(1.0, ev.size() > 0 ? ev(ev.size() - 1) : 0.0);
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (std::abs(ev(i)) <= floor) ev(i) = 0.0;
  Eigen::VectorXd sv(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i) sv(i) = std::sqrt(std::max(0.0, ev(ev.size() - 1 - i)));
  return sv;
}

}  // namespace nuframe
