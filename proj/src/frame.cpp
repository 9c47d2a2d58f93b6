#include "nuframe/frame.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <set>
#include <string>

#include "nuframe/errors.hpp"

namespace nuframe {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

template <class Seq>
void check_envelopes(const std::vector<Seq>& envs) {
  if (envs.empty()) throw Error(ErrorCode::InvalidInput, "a frame system needs at least one envelope");
  for (std::size_t j = 0; j < envs.size(); ++j) {
    if (!(envs[j].lattice() == envs.front().lattice()) || envs[j].n() != envs.front().n())
      throw Error(ErrorCode::MixedLattice, "envelope " + std::to_string(j) + " does not share lattice and n");
    if (envs[j].is_zero()) throw Error(ErrorCode::InvalidInput, "envelope " + std::to_string(j) + " is zero");
  }
}

void require_compatible(const FrameSystem& sys, const SpectralLattice& L, int n) {
  if (!(sys.lattice() == L) || sys.n() != n)
    throw Error(ErrorCode::MixedLattice, "signal and system live on different spaces");
}

}  // namespace

// -------------------------------------------------------------- FrameSystem

FrameSystem::FrameSystem(std::vector<MatrixSeq> envelopes)
    : lattice_((check_envelopes(envelopes), envelopes.front().lattice())),
      n_(envelopes.front().n()),
      envelopes_(std::move(envelopes)) {}

FrameSystem::FrameSystem(std::vector<SpectrumStep> envelopes)
    : lattice_((check_envelopes(envelopes), envelopes.front().lattice())),
      n_(envelopes.front().n()),
      envelopes_(std::move(envelopes)) {}

int FrameSystem::p() const noexcept {
  return std::visit([](const auto& v) { return static_cast<int>(v.size()); }, envelopes_);
}

const std::vector<MatrixSeq>& FrameSystem::time_envelopes() const {
  if (is_spectral()) throw Error(ErrorCode::InvalidInput, "system is given by step spectra, not sequences");
  return std::get<std::vector<MatrixSeq>>(envelopes_);
}

const std::vector<SpectrumStep>& FrameSystem::spectral_envelopes() const {
  if (!is_spectral()) throw Error(ErrorCode::InvalidInput, "system is given by sequences, not step spectra");
  return std::get<std::vector<SpectrumStep>>(envelopes_);
}

CMatrix FrameSystem::envelope_spectrum(int j, double x) const {
  if (is_spectral()) return spectral_envelopes().at(static_cast<std::size_t>(j)).eval(x);
  return fourier_eval(time_envelopes().at(static_cast<std::size_t>(j)), x);
}

bool FrameSystem::operator==(const FrameSystem& other) const {
  return lattice_ == other.lattice_ && n_ == other.n_ && envelopes_ == other.envelopes_;
}

// --------------------------------------------------------- CoefficientTable

CoefficientTable::CoefficientTable(Map values) {
  for (auto& [k, v] : values) set(k, v);
}

Complex CoefficientTable::at(const CoefficientKey& key) const {
  auto it = values_.find(key);
  return it == values_.end() ? Complex(0.0, 0.0) : it->second;
}

void CoefficientTable::set(const CoefficientKey& key, Complex value) {
  if (value == Complex(0.0, 0.0))
    values_.erase(key);
  else
    values_[key] = value;
}

double CoefficientTable::norm_squared() const {
  double acc = 0.0;
  for (const auto& [k, v] : values_) acc += std::norm(v);
  return acc;
}

void CoefficientTable::write_csv(std::ostream& out) const {
  out << "s,l,j,re,im\n";
  out << std::setprecision(17);
  for (const auto& [k, v] : values_)
    out << k.point.s << ',' << k.point.l << ',' << k.j << ',' << v.real() << ',' << v.imag() << '\n';
}

CoefficientTable operator+(const CoefficientTable& a, const CoefficientTable& b) {
  CoefficientTable out = a;
  for (const auto& [k, v] : b.values()) out.set(k, out.at(k) + v);
  return out;
}

CoefficientTable operator*(Complex alpha, const CoefficientTable& c) {
  CoefficientTable out;
  for (const auto& [k, v] : c.values()) out.set(k, alpha * v);
  return out;
}

// ---------------------------------------------------------------- frame sums

std::vector<LatticePoint> overlapping_shifts(const MatrixSeq& f, const MatrixSeq& env) {
  const SpectralLattice& L = f.lattice();
  const std::int64_t period = 2 * static_cast<std::int64_t>(L.N());
  std::set<LatticePoint> shifts;
  for (const auto& [pf, mf] : f.entries()) {
    for (const auto& [pe, me] : env.entries()) {
      if (pf.s != pe.s) continue;
      // Need pf.l - pe.l = r*s + 2N*l for some coset s.
      const std::int64_t delta = pf.l - pe.l;
      if (floor_mod(delta, period) == 0) {
        shifts.insert({0, delta / period});
      } else if (floor_mod(delta - L.r(), period) == 0) {
        shifts.insert({1, (delta - L.r()) / period});
      }
    }
  }
  return {shifts.begin(), shifts.end()};
}

double frame_sum(const FrameSystem& sys, const MatrixSeq& f) {
  require_compatible(sys, f.lattice(), f.n());
  double acc = 0.0;
  for (const MatrixSeq& env : sys.time_envelopes())
    for (const LatticePoint& q : overlapping_shifts(f, env)) acc += std::norm(inner_time(f, displace(env, q)));
  return acc;
}

namespace {

struct Folded {
  // h[g*K + k] on the 2NK low cells: X(y) + X(y + N/2), X = sum_{m,k} F conj(F_j).
  std::vector<Complex> h;
  int K = 1;
};

Folded fold_envelope(const SpectrumStep& F, const SpectrumStep& env) {
  const int K = common_refinement(F.refinement(), env.refinement());
  const SpectrumStep a = F.refined(K);
  const SpectrumStep b = env.refined(K);
  const std::size_t per_branch = a.cell_count() / 2;
  Folded out;
  out.K = K;
  out.h.resize(per_branch);
  for (std::size_t c = 0; c < per_branch; ++c)
    out.h[c] = frobenius_inner(a.value(c), b.value(c)) +
               frobenius_inner(a.value(per_branch + c), b.value(per_branch + c));
  return out;
}

/// Per sub-cell k of [0, 1/4N): the even-coset sum sum_g h and the odd-coset sum
/// sum_g h e^{-pi i r g / N} (the e^{-4 pi i r x} factor is unimodular).
std::pair<std::vector<Complex>, std::vector<Complex>> coset_folds(const Folded& f, const SpectralLattice& L) {
  const int N = L.N();
  std::vector<Complex> even(static_cast<std::size_t>(f.K)), odd(static_cast<std::size_t>(f.K));
  for (int k = 0; k < f.K; ++k) {
    Complex e(0.0, 0.0), o(0.0, 0.0);
    for (int g = 0; g < 2 * N; ++g) {
      const Complex v = f.h[static_cast<std::size_t>(g * f.K + k)];
      e += v;
      o += v * std::polar(1.0, -std::numbers::pi * L.r() * g / N);
    }
    even[static_cast<std::size_t>(k)] = e;
    odd[static_cast<std::size_t>(k)] = o;
  }
  return {even, odd};
}

}  // namespace

double frame_sum_spectral(const FrameSystem& sys, const SpectrumStep& F) {
  require_compatible(sys, F.lattice(), F.n());
  const SpectralLattice& L = sys.lattice();
  double acc = 0.0;
  for (const SpectrumStep& env : sys.spectral_envelopes()) {
    const Folded folded = fold_envelope(F, env);
    const auto [even, odd] = coset_folds(folded, L);
    const double width = 1.0 / (4.0 * L.N() * folded.K);
    double per_env = 0.0;
    for (int k = 0; k < folded.K; ++k)
      per_env += std::norm(even[static_cast<std::size_t>(k)]) + std::norm(odd[static_cast<std::size_t>(k)]);
    acc += per_env * width / (4.0 * L.N());
  }
  return acc;
}

TruncatedSum frame_sum_spectral_truncated(const FrameSystem& sys, const SpectrumStep& F, int L) {
  require_compatible(sys, F.lattice(), F.n());
  if (L < 1) throw Error(ErrorCode::DomainError, "truncation window must be >= 1");
  const SpectralLattice& lat = sys.lattice();
  const double N = lat.N();
  const double r = lat.r();
  TruncatedSum out;
  out.window = L;
  for (const SpectrumStep& env : sys.spectral_envelopes()) {
    for (std::int64_t l = -L; l <= L; ++l)
      for (int s = 0; s <= 1; ++s) out.value += std::norm(step_inner(F, env, {s, l}));

    // Coefficients are Fourier coefficients of step functions on [0, 1/4N); summation by
    // parts bounds each by (jump variation) / (2 pi |frequency|).
    const auto [even, odd] = coset_folds(fold_envelope(F, env), lat);
    auto variation = [](const std::vector<Complex>& v, bool periodic) {
      double tv = 0.0;
      for (std::size_t k = 1; k < v.size(); ++k) tv += std::abs(v[k] - v[k - 1]);
      tv += periodic ? std::abs(v.front() - v.back()) : std::abs(v.front()) + std::abs(v.back());
      return tv;
    };
    const double c_even = variation(even, true) / (2.0 * std::numbers::pi);
    const double c_odd = variation(odd, false) / (2.0 * std::numbers::pi);
    // sum_{|l|>L} 1/(4Nl)^2 <= 2/(16 N^2 L);  sum_{|l|>L} 1/(4N|l| - 2r)^2 <= 2/(4N (4NL - 2r)).
    out.tail_bound += c_even * c_even * 2.0 / (16.0 * N * N * L) + c_odd * c_odd * 2.0 / (4.0 * N * (4.0 * N * L - 2.0 * r));
  }
  return out;
}

// ---------------------------------------------------- analysis and synthesis

AnalysisResult analysis(const FrameSystem& sys, const MatrixSeq& f, int window) {
  require_compatible(sys, f.lattice(), f.n());
  if (window < 0) throw Error(ErrorCode::DomainError, "analysis window must be nonnegative");
  AnalysisResult out;
  const auto& envs = sys.time_envelopes();
  for (std::size_t j = 0; j < envs.size(); ++j) {
    std::set<LatticePoint> shifts;
    for (const LatticePoint& q : overlapping_shifts(f, envs[j])) {
      shifts.insert(q);
      if (q.l < -window || q.l > window) out.window_covers_overlap = false;
    }
    if (!f.is_zero())
      for (std::int64_t l = -window; l <= window; ++l) {
        shifts.insert({0, l});
        shifts.insert({1, l});
      }
    for (const LatticePoint& q : shifts)
      out.table.set({q, static_cast<int>(j)}, inner_time(f, displace(envs[j], q)));
  }
  return out;
}

MatrixSeq synthesis(const FrameSystem& sys, const CoefficientTable& c) {
  const auto& envs = sys.time_envelopes();
  MatrixSeq out(sys.lattice(), sys.n());
  for (const auto& [key, value] : c.values()) {
    if (key.j < 0 || key.j >= static_cast<int>(envs.size()))
      throw Error(ErrorCode::ShapeMismatch, "coefficient index j=" + std::to_string(key.j) + " out of range");
    out += value * displace(envs[static_cast<std::size_t>(key.j)], key.point);
  }
  return out;
}

FrameOperatorResult frame_operator_apply(const FrameSystem& sys, const MatrixSeq& f, int window) {
  AnalysisResult a = analysis(sys, f, window);
  return {synthesis(sys, a.table), a.window_covers_overlap};
}

}  // namespace nuframe
