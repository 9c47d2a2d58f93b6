#include "nuframe/signal.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "nuframe/errors.hpp"

namespace nuframe {

namespace {

bool exactly_zero(const CMatrix& m) { return (m.array() == Complex(0.0, 0.0)).all(); }

void require_same_space(const SpectralLattice& a, int na, const SpectralLattice& b, int nb) {
  if (!(a == b)) throw Error(ErrorCode::MixedLattice, "operands live on different lattices");
  if (na != nb) throw Error(ErrorCode::MixedLattice, "operands have different matrix dimensions");
}

void require_square(const CMatrix& m, int n) {
  if (m.rows() != n || m.cols() != n)
    throw Error(ErrorCode::ShapeMismatch, "expected a " + std::to_string(n) + "x" + std::to_string(n) +
                                              " matrix, got " + std::to_string(m.rows()) + "x" +
                                              std::to_string(m.cols()));
}

constexpr int kMaxRefinement = 4096;

}  // namespace

// ---------------------------------------------------------------- MatrixSeq

MatrixSeq::MatrixSeq(SpectralLattice lattice, int n) : lattice_(lattice), n_(n) {
  if (n < 1) throw Error(ErrorCode::DomainError, "matrix dimension n must be >= 1");
}

MatrixSeq::MatrixSeq(SpectralLattice lattice, int n, Entries entries) : MatrixSeq(lattice, n) {
  for (auto& [p, m] : entries) {
    if (p.s != 0 && p.s != 1) throw Error(ErrorCode::InvalidInput, "coset selector s must be 0 or 1");
    require_square(m, n);
    if (!exactly_zero(m)) entries_.emplace(p, std::move(m));
  }
}

CMatrix MatrixSeq::at(const LatticePoint& p) const {
  auto it = entries_.find(p);
  if (it == entries_.end()) return CMatrix::Zero(n_, n_);
  return it->second;
}

void MatrixSeq::accumulate(const LatticePoint& p, const CMatrix& value) {
  require_square(value, n_);
  auto it = entries_.find(p);
  if (it == entries_.end()) {
    if (!exactly_zero(value)) entries_.emplace(p, value);
    return;
  }
  it->second += value;
  if (exactly_zero(it->second)) entries_.erase(it);
}

double MatrixSeq::norm_squared() const {
  double acc = 0.0;
  for (const auto& [p, m] : entries_) acc += m.squaredNorm();
  return acc;
}

MatrixSeq& MatrixSeq::operator+=(const MatrixSeq& other) {
  require_same_space(lattice_, n_, other.lattice_, other.n_);
  for (const auto& [p, m] : other.entries_) accumulate(p, m);
  return *this;
}

MatrixSeq& MatrixSeq::operator*=(Complex alpha) {
  if (alpha == Complex(0.0, 0.0)) {
    entries_.clear();
    return *this;
  }
  for (auto it = entries_.begin(); it != entries_.end();) {
    it->second *= alpha;
    if (exactly_zero(it->second))
      it = entries_.erase(it);
    else
      ++it;
  }
  return *this;
}

bool MatrixSeq::operator==(const MatrixSeq& other) const {
  if (!(lattice_ == other.lattice_) || n_ != other.n_) return false;
  if (entries_.size() != other.entries_.size()) return false;
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  for (; a != entries_.end(); ++a, ++b) {
    if (!(a->first == b->first)) return false;
    if (!(a->second.array() == b->second.array()).all()) return false;
  }
  return true;
}

MatrixSeq operator+(MatrixSeq a, const MatrixSeq& b) { return a += b; }
MatrixSeq operator-(MatrixSeq a, const MatrixSeq& b) { return a += Complex(-1.0, 0.0) * b; }
MatrixSeq operator*(Complex alpha, MatrixSeq f) { return f *= alpha; }

MatrixSeq translate_l(const MatrixSeq& f, std::int64_t delta_l) {
  MatrixSeq::Entries moved;
  for (const auto& [p, m] : f.entries()) moved.emplace(LatticePoint{p.s, p.l + delta_l}, m);
  return MatrixSeq(f.lattice(), f.n(), std::move(moved));
}

MatrixSeq displace(const MatrixSeq& f, const LatticePoint& q) {
  return translate_l(f, shift_in_l(q, f.lattice()));
}

CMatrix fourier_eval(const MatrixSeq& f, double x) {
  CMatrix out = CMatrix::Zero(f.n(), f.n());
  const double two_pi = 2.0 * std::numbers::pi;
  for (const auto& [p, m] : f.entries()) {
    const double lambda = lambda_value(p, f.lattice()).to_double();
    const Complex phase = std::polar(1.0, two_pi * lambda * x);
    out += phase * m;
  }
  return out;
}

Complex frobenius_inner(const CMatrix& A, const CMatrix& B) {
  Complex acc(0.0, 0.0);
  for (Eigen::Index m = 0; m < A.rows(); ++m)
    for (Eigen::Index k = 0; k < A.cols(); ++k) acc += A(m, k) * std::conj(B(m, k));
  return acc;
}

Complex inner_time(const MatrixSeq& f, const MatrixSeq& g) {
  require_same_space(f.lattice(), f.n(), g.lattice(), g.n());
  Complex acc(0.0, 0.0);
  const auto& small = f.support_size() <= g.support_size() ? f.entries() : g.entries();
  const bool f_small = &small == &f.entries();
  for (const auto& [p, m] : small) {
    const auto& other = f_small ? g.entries() : f.entries();
    auto it = other.find(p);
    if (it == other.end()) continue;
    acc += f_small ? frobenius_inner(m, it->second) : frobenius_inner(it->second, m);
  }
  return acc;
}

double matrix_frobenius_norm(const CMatrix& M) { return std::sqrt(M.squaredNorm()); }

// ------------------------------------------------------------- SpectrumStep

SpectrumStep::SpectrumStep(SpectralLattice lattice, int n, int refinement)
    : lattice_(lattice), n_(n), refinement_(refinement) {
  if (n < 1) throw Error(ErrorCode::DomainError, "matrix dimension n must be >= 1");
  if (refinement < 1 || refinement > kMaxRefinement)
    throw Error(ErrorCode::RefinementMismatch, "refinement must lie in [1, 4096]");
  cells_ = omega_cells(lattice_, refinement_);
  values_.assign(cells_.size(), CMatrix::Zero(n, n));
}

SpectrumStep::SpectrumStep(SpectralLattice lattice, int n, int refinement, std::vector<CMatrix> cells)
    : SpectrumStep(lattice, n, refinement) {
  if (cells.size() != values_.size())
    throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(values_.size()) + " cell values, got " +
                                              std::to_string(cells.size()));
  for (std::size_t i = 0; i < cells.size(); ++i) set_value(i, std::move(cells[i]));
}

double SpectrumStep::cell_width() const noexcept { return 1.0 / (4.0 * lattice_.N() * refinement_); }

void SpectrumStep::set_value(std::size_t cell, CMatrix v) {
  require_square(v, n_);
  values_.at(cell) = std::move(v);
}

std::ptrdiff_t SpectrumStep::cell_index(double x) const noexcept {
  if (!in_omega(lattice_, x)) return -1;
  const std::ptrdiff_t per_branch = 2 * static_cast<std::ptrdiff_t>(lattice_.N()) * refinement_;
  const double scale = 4.0 * lattice_.N() * refinement_;
  // Inside Omega the low branch is [0, 1/2); everything at or above 1/2 is the high branch.
  const bool high = x >= 0.5;
  const double offset = high ? x - 0.5 * lattice_.N() : x;
  auto idx = static_cast<std::ptrdiff_t>(std::floor(offset * scale));
  if (idx >= per_branch) idx = per_branch - 1;
  if (idx < 0) idx = 0;
  return high ? per_branch + idx : idx;
}

CMatrix SpectrumStep::eval(double x) const {
  const auto idx = cell_index(x);
  if (idx < 0) return CMatrix::Zero(n_, n_);
  return values_[static_cast<std::size_t>(idx)];
}

double SpectrumStep::norm_squared() const {
  double acc = 0.0;
  for (const auto& v : values_) acc += v.squaredNorm();
  return acc * cell_width();
}

bool SpectrumStep::is_zero() const noexcept {
  for (const auto& v : values_)
    if (!exactly_zero(v)) return false;
  return true;
}

SpectrumStep SpectrumStep::refined(int K) const {
  if (K == refinement_) return *this;
  if (K % refinement_ != 0)
    throw Error(ErrorCode::RefinementMismatch, "refinement " + std::to_string(K) + " is not a multiple of " +
                                                   std::to_string(refinement_));
  const int factor = K / refinement_;
  SpectrumStep out(lattice_, n_, K);
  for (std::size_t c = 0; c < values_.size(); ++c)
    for (int sub = 0; sub < factor; ++sub) out.values_[c * factor + sub] = values_[c];
  return out;
}

bool SpectrumStep::operator==(const SpectrumStep& other) const {
  if (!(lattice_ == other.lattice_) || n_ != other.n_ || refinement_ != other.refinement_) return false;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (!(values_[i].array() == other.values_[i].array()).all()) return false;
  return true;
}

int common_refinement(int K1, int K2) {
  const long long k = std::lcm(static_cast<long long>(K1), static_cast<long long>(K2));
  if (k > kMaxRefinement)
    throw Error(ErrorCode::RefinementMismatch,
                "refinements " + std::to_string(K1) + " and " + std::to_string(K2) + " have no common grid within cap");
  return static_cast<int>(k);
}

Complex exp_integral(double nu, double a, double b) {
  if (std::abs(nu) < 1e-12) return {b - a, 0.0};
  const double w = 2.0 * std::numbers::pi * nu;
  // (e^{iwb} - e^{iwa}) / (iw)
  const Complex diff = std::polar(1.0, w * b) - std::polar(1.0, w * a);
  return diff / Complex(0.0, w);
}

Complex inner_step_trig(const SpectrumStep& S, const MatrixSeq& f, const LatticePoint& q) {
  require_same_space(S.lattice(), S.n(), f.lattice(), f.n());
  const MatrixSeq moved = displace(f, q);
  Complex acc(0.0, 0.0);
  for (std::size_t c = 0; c < S.cell_count(); ++c) {
    const CMatrix& value = S.value(c);
    if (exactly_zero(value)) continue;
    const OmegaCell& cell = S.cells()[c];
    for (const auto& [p, m] : moved.entries()) {
      const double nu = lambda_value(p, f.lattice()).to_double();
      acc += frobenius_inner(value, m) * std::conj(exp_integral(nu, cell.lo(), cell.hi()));
    }
  }
  return acc;
}

Complex step_inner(const SpectrumStep& S, const SpectrumStep& T, const LatticePoint& q) {
  require_same_space(S.lattice(), S.n(), T.lattice(), T.n());
  const int K = common_refinement(S.refinement(), T.refinement());
  const SpectrumStep a = S.refined(K);
  const SpectrumStep b = T.refined(K);
  const double nu = 2.0 * static_cast<double>(shift_in_l(q, S.lattice()));
  Complex acc(0.0, 0.0);
  for (std::size_t c = 0; c < a.cell_count(); ++c) {
    const Complex pair = frobenius_inner(a.value(c), b.value(c));
    if (pair == Complex(0.0, 0.0)) continue;
    const OmegaCell& cell = a.cells()[c];
    acc += pair * std::conj(exp_integral(nu, cell.lo(), cell.hi()));
  }
  return acc;
}

}  // namespace nuframe
