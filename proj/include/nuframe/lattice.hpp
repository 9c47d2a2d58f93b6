#pragma once

// Translation set Lambda = {0, r/N} + 2Z and its spectral partner
// Omega = [0, 1/2) u [N/2, (N+1)/2).

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace nuframe {

class SpectralLattice {
 public:
  /// Throws Error(RejectedParameters) unless r is odd, 1 <= r <= 2N-1 and gcd(r, N) = 1.
  SpectralLattice(int N, int r);

  int N() const noexcept { return N_; }
  int r() const noexcept { return r_; }

  /// Width of one sampling cell, 1/(4N).
  double base_width() const noexcept { return 1.0 / (4.0 * N_); }

  bool operator==(const SpectralLattice&) const = default;

 private:
  int N_;
  int r_;
};

SpectralLattice make_lattice(int N, int r);

/// lambda = s*r/N + 2l. `s` selects the coset, `l` the translation.
struct LatticePoint {
  int s = 0;
  std::int64_t l = 0;

  bool operator==(const LatticePoint&) const = default;
  // Summation order everywhere: by l, then s.
  std::strong_ordering operator<=>(const LatticePoint& o) const {
    if (auto c = l <=> o.l; c != 0) return c;
    return s <=> o.s;
  }
};

/// Exact rational lambda value with the lattice denominator N (not reduced).
struct LambdaValue {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;

  double to_double() const noexcept {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
  bool operator==(const LambdaValue& o) const noexcept {
    return numerator * o.denominator == o.numerator * denominator;
  }
};

LambdaValue lambda_value(const LatticePoint& p, const SpectralLattice& L);

/// Point q' with lambda(q') = lambda(p) + 2N*lambda(q). Always in Lambda since 2N*(r/N) = 2r.
LatticePoint shifted(const LatticePoint& p, const LatticePoint& q, const SpectralLattice& L);

/// 2N*lambda(q) expressed as a translation-index offset: r*s + 2N*l (always an integer).
std::int64_t shift_in_l(const LatticePoint& q, const SpectralLattice& L) noexcept;

/// Point with lambda = lambda(a) + lambda(b), when that sum lies in Lambda.
std::optional<LatticePoint> lambda_sum(const LatticePoint& a, const LatticePoint& b,
                                       const SpectralLattice& L);

enum class Branch { Low, High };

/// Half-open interval [lo, hi) with endpoints numerator/denominator.
struct OmegaCell {
  std::int64_t lo_numerator = 0;
  std::int64_t hi_numerator = 0;
  std::int64_t denominator = 1;
  Branch branch = Branch::Low;

  double lo() const noexcept { return static_cast<double>(lo_numerator) / denominator; }
  double hi() const noexcept { return static_cast<double>(hi_numerator) / denominator; }
  double width() const noexcept { return static_cast<double>(hi_numerator - lo_numerator) / denominator; }
};

/// 4NK cells of width 1/(4NK): low branch first, then high branch.
std::vector<OmegaCell> omega_cells(const SpectralLattice& L, int K);

/// True iff x lies in Omega.
bool in_omega(const SpectralLattice& L, double x) noexcept;

}  // namespace nuframe
