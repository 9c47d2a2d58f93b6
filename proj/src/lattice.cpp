#include "nuframe/lattice.hpp"

#include <numeric>
#include <string>

#include "nuframe/errors.hpp"

namespace nuframe {

SpectralLattice::SpectralLattice(int N, int r) : N_(N), r_(r) {
  if (N < 1) throw Error(ErrorCode::RejectedParameters, "N must be positive, got " + std::to_string(N));
  if (r < 1 || r > 2 * N - 1)
    throw Error(ErrorCode::RejectedParameters,
                "r must lie in [1, 2N-1], got r=" + std::to_string(r) + " with N=" + std::to_string(N));
  if (r % 2 == 0) throw Error(ErrorCode::RejectedParameters, "r must be odd, got " + std::to_string(r));
  if (std::gcd(r, N) != 1)
    throw Error(ErrorCode::RejectedParameters,
                "r must be coprime to N, got r=" + std::to_string(r) + " N=" + std::to_string(N));
}

SpectralLattice make_lattice(int N, int r) { return SpectralLattice(N, r); }

LambdaValue lambda_value(const LatticePoint& p, const SpectralLattice& L) {
  return {p.s * L.r() + 2 * p.l * L.N(), L.N()};
}

std::int64_t shift_in_l(const LatticePoint& q, const SpectralLattice& L) noexcept {
  return static_cast<std::int64_t>(L.r()) * q.s + 2 * static_cast<std::int64_t>(L.N()) * q.l;
}

LatticePoint shifted(const LatticePoint& p, const LatticePoint& q, const SpectralLattice& L) {
  return {p.s, p.l + shift_in_l(q, L)};
}

std::optional<LatticePoint> lambda_sum(const LatticePoint& a, const LatticePoint& b,
                                       const SpectralLattice& L) {
  const int s = a.s + b.s;
  if (s <= 1) return LatticePoint{s, a.l + b.l};
  // 2r/N + 2(la+lb) is in Lambda only in the uniform case N = 1, where 2r/N = 2.
  if (L.N() == 1) return LatticePoint{0, a.l + b.l + L.r()};
  return std::nullopt;
}

std::vector<OmegaCell> omega_cells(const SpectralLattice& L, int K) {
  if (K < 1) throw Error(ErrorCode::DomainError, "refinement K must be >= 1");
  const std::int64_t N = L.N();
  const std::int64_t den = 4 * N * K;
  const std::int64_t per_branch = 2 * N * K;
  // N/2 = 2N^2K / (4NK)
  const std::int64_t high_start = 2 * N * N * K;
  std::vector<OmegaCell> cells;
  cells.reserve(2 * per_branch);
  for (std::int64_t g = 0; g < per_branch; ++g) cells.push_back({g, g + 1, den, Branch::Low});
  for (std::int64_t g = 0; g < per_branch; ++g)
    cells.push_back({high_start + g, high_start + g + 1, den, Branch::High});
  return cells;
}

bool in_omega(const SpectralLattice& L, double x) noexcept {
  const double half = 0.5 * L.N();
  return (x >= 0.0 && x < 0.5) || (x >= half && x < half + 0.5);
}

}  // namespace nuframe
