#pragma once

// Systems of non-uniform shifts {D_{2N lambda} f_j}: frame sums, analysis and
// synthesis, and the exact coset-folded evaluation for step spectra.

#include <map>
#include <ostream>
#include <variant>
#include <vector>

#include "nuframe/signal.hpp"

namespace nuframe {

/// p envelopes sharing one lattice and matrix size, given either in time (MatrixSeq)
/// or in frequency (SpectrumStep). Zero envelopes are rejected.
class FrameSystem {
 public:
  explicit FrameSystem(std::vector<MatrixSeq> envelopes);
  explicit FrameSystem(std::vector<SpectrumStep> envelopes);

  const SpectralLattice& lattice() const noexcept { return lattice_; }
  int n() const noexcept { return n_; }
  int p() const noexcept;
  bool is_spectral() const noexcept { return std::holds_alternative<std::vector<SpectrumStep>>(envelopes_); }

  /// Throws InvalidInput when the system is in spectral form.
  const std::vector<MatrixSeq>& time_envelopes() const;
  /// Throws InvalidInput when the system is in time form.
  const std::vector<SpectrumStep>& spectral_envelopes() const;

  /// F(f_j)(x) in either representation (step form is zero outside Omega).
  CMatrix envelope_spectrum(int j, double x) const;

  bool operator==(const FrameSystem& other) const;

 private:
  SpectralLattice lattice_;
  int n_;
  std::variant<std::vector<MatrixSeq>, std::vector<SpectrumStep>> envelopes_;
};

struct CoefficientKey {
  LatticePoint point;
  int j = 0;
  auto operator<=>(const CoefficientKey&) const = default;
};

/// Sparse {c_{lambda, j}}.
class CoefficientTable {
 public:
  using Map = std::map<CoefficientKey, Complex>;

  CoefficientTable() = default;
  explicit CoefficientTable(Map values);

  const Map& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  Complex at(const CoefficientKey& key) const;
  void set(const CoefficientKey& key, Complex value);
  double norm_squared() const;

  /// Columns s,l,j,re,im with full double precision.
  void write_csv(std::ostream& out) const;

 private:
  Map values_;
};

CoefficientTable operator+(const CoefficientTable& a, const CoefficientTable& b);
CoefficientTable operator*(Complex alpha, const CoefficientTable& c);

/// Shifts q for which <f, D_{2N lambda(q)} env> can be nonzero, in ascending order.
/// Exact: derived from pairs of support points on the same coset.
std::vector<LatticePoint> overlapping_shifts(const MatrixSeq& f, const MatrixSeq& env);

/// sum_{j, lambda} |<f, D_{2N lambda} f_j>|^2, exact over the finitely many overlapping shifts.
double frame_sum(const FrameSystem& sys, const MatrixSeq& f);

/// Same sum for a step spectrum F against a step-form system, evaluated exactly by folding
/// both cosets onto [0, 1/4N) and applying orthonormality of sqrt(4N) e^{2 pi i 4N l x}.
double frame_sum_spectral(const FrameSystem& sys, const SpectrumStep& F);

struct TruncatedSum {
  double value = 0.0;
  double tail_bound = 0.0;
  int window = 0;
};

/// Direct sum of |step_inner(F, F(f_j), q)|^2 over |l| <= L on both cosets, plus a rigorous
/// bound on the omitted tail from the total variation of the folded step functions.
TruncatedSum frame_sum_spectral_truncated(const FrameSystem& sys, const SpectrumStep& F, int L);

struct AnalysisResult {
  CoefficientTable table;
  /// True when the window |l| <= L contained every overlapping shift.
  bool window_covers_overlap = true;
};

/// Coefficients <f, D_{2N lambda} f_j> for |l| <= L plus every overlapping shift.
AnalysisResult analysis(const FrameSystem& sys, const MatrixSeq& f, int window);

/// sum c_{lambda, j} D_{2N lambda} f_j.
MatrixSeq synthesis(const FrameSystem& sys, const CoefficientTable& c);

struct FrameOperatorResult {
  MatrixSeq value;
  bool window_covers_overlap = true;
};

/// S f = sum <f, D f_j> D f_j.
FrameOperatorResult frame_operator_apply(const FrameSystem& sys, const MatrixSeq& f, int window);

}  // namespace nuframe
