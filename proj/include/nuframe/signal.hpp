#pragma once

// Matrix-valued sequences on Lambda, their Fourier transforms on Omega, and
// piecewise-constant spectra on Omega cells.

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <vector>

#include "nuframe/lattice.hpp"

namespace nuframe {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Finitely supported map Lambda -> M_n. Zero matrices are never stored.
class MatrixSeq {
 public:
  using Entries = std::map<LatticePoint, CMatrix>;

  MatrixSeq(SpectralLattice lattice, int n);
  MatrixSeq(SpectralLattice lattice, int n, Entries entries);

  const SpectralLattice& lattice() const noexcept { return lattice_; }
  int n() const noexcept { return n_; }
  const Entries& entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }
  std::size_t support_size() const noexcept { return entries_.size(); }

  /// Entry at p, or the zero matrix off the support.
  CMatrix at(const LatticePoint& p) const;

  /// Adds `value` to the entry at p, pruning it if the result is exactly zero.
  void accumulate(const LatticePoint& p, const CMatrix& value);

  double norm_squared() const;

  MatrixSeq& operator+=(const MatrixSeq& other);
  MatrixSeq& operator*=(Complex alpha);

  bool operator==(const MatrixSeq& other) const;

 private:
  SpectralLattice lattice_;
  int n_;
  Entries entries_;
};

MatrixSeq operator+(MatrixSeq a, const MatrixSeq& b);
MatrixSeq operator-(MatrixSeq a, const MatrixSeq& b);
MatrixSeq operator*(Complex alpha, MatrixSeq f);

/// D_{2N lambda(q)} f.
MatrixSeq displace(const MatrixSeq& f, const LatticePoint& q);

/// Raw translation of the translation index by `delta_l`; displace() is the special case
/// delta_l = r*s + 2N*l.
MatrixSeq translate_l(const MatrixSeq& f, std::int64_t delta_l);

/// F(f)(x), entry (m,k) = sum_lambda f_{m,k}(lambda) e^{2 pi i lambda x}, summed in (l, s) order.
CMatrix fourier_eval(const MatrixSeq& f, double x);

/// <f, g> = sum_lambda tr(f(lambda) g(lambda)^*). Throws MixedLattice on incompatible inputs.
Complex inner_time(const MatrixSeq& f, const MatrixSeq& g);

double matrix_frobenius_norm(const CMatrix& M);

/// Frobenius inner product sum_{m,k} A_{mk} conj(B_{mk}).
Complex frobenius_inner(const CMatrix& A, const CMatrix& B);

/// Piecewise-constant M_n-valued function on omega_cells(lattice, K).
class SpectrumStep {
 public:
  SpectrumStep(SpectralLattice lattice, int n, int refinement);
  SpectrumStep(SpectralLattice lattice, int n, int refinement, std::vector<CMatrix> cells);

  const SpectralLattice& lattice() const noexcept { return lattice_; }
  int n() const noexcept { return n_; }
  int refinement() const noexcept { return refinement_; }
  std::size_t cell_count() const noexcept { return values_.size(); }
  double cell_width() const noexcept;

  const std::vector<OmegaCell>& cells() const noexcept { return cells_; }
  const CMatrix& value(std::size_t cell) const { return values_.at(cell); }
  void set_value(std::size_t cell, CMatrix v);

  /// Index of the cell containing x, or -1 outside Omega.
  std::ptrdiff_t cell_index(double x) const noexcept;
  /// Value at x; zero outside Omega.
  CMatrix eval(double x) const;

  double norm_squared() const;
  bool is_zero() const noexcept;

  /// Exact subdivision onto refinement `K`, which must be a multiple of the current one.
  SpectrumStep refined(int K) const;

  bool operator==(const SpectrumStep& other) const;

 private:
  SpectralLattice lattice_;
  int n_;
  int refinement_;
  std::vector<OmegaCell> cells_;
  std::vector<CMatrix> values_;
};

/// Refinement both steps can be subdivided onto. Throws RefinementMismatch past the cell cap.
int common_refinement(int K1, int K2);

/// int_a^b e^{2 pi i nu x} dx, with the constant-integrand formula for |nu| < 1e-12.
Complex exp_integral(double nu, double a, double b);

/// <S, e^{4 pi i N lambda(q) x} F(f)>_{L^2(Omega)} in closed form.
Complex inner_step_trig(const SpectrumStep& S, const MatrixSeq& f, const LatticePoint& q);

/// <S, e^{4 pi i N lambda(q) x} T>_{L^2(Omega)} in closed form.
Complex step_inner(const SpectrumStep& S, const SpectrumStep& T, const LatticePoint& q);

}  // namespace nuframe
