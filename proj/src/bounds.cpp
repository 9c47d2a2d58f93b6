#include "nuframe/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nuframe/errors.hpp"
#include "nuframe/gamma.hpp"
#include "nuframe/parallel.hpp"

namespace nuframe {

SupNormEstimate envelope_sup_norm(const FrameSystem& sys, int grid) {
  if (grid < 2) throw Error(ErrorCode::DomainError, "sup-norm grid needs at least 2 points per branch");
  SupNormEstimate best;
  best.grid = grid;
  best.value = -1.0;
  const double upper = 0.5 * sys.lattice().N();
  for (int branch = 0; branch < 2; ++branch) {
    for (int i = 0; i < grid; ++i) {
      const double x = (branch == 0 ? 0.0 : upper) + (i + 0.5) / (2.0 * grid);
      for (int j = 0; j < sys.p(); ++j) {
        const double v = matrix_frobenius_norm(sys.envelope_spectrum(j, x));
        if (v > best.value) {
          best.value = v;
          best.j_at_max = j;
          best.x_at_max = x;
        }
      }
    }
  }
  return best;
}

double bessel_sufficient_bound(int p, int n, double b_sup) {
  if (p < 1 || n < 1 || !(b_sup > 0.0))
    throw Error(ErrorCode::DomainError, "bessel_sufficient_bound needs p >= 1, n >= 1, b > 0");
  return std::ldexp(b_sup * b_sup * n * n, p - 1);
}

NecessaryBounds bessel_necessary_bounds(int N, double b0) {
  if (N < 1 || !(b0 > 0.0)) throw Error(ErrorCode::DomainError, "bessel_necessary_bounds needs N >= 1, b0 > 0");
  return {2.0 * std::sqrt(N * b0), N + b0};
}

bool feasibility(int p, int n, int N) noexcept {
  return 2LL * p >= 4LL * N * n * n;
}

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::Frame: return "frame";
    case Verdict::BesselOnly: return "bessel_only";
    case Verdict::RankDeficient: return "rank_deficient";
  }
  return "unknown";
}

namespace {

constexpr double kSingularThreshold = 1e-10;

struct Sweep {
  std::vector<double> x, lo, hi;
};

Sweep sweep(const FrameSystem& sys, int grid, bool feasible, unsigned threads) {
  const double four_N = 4.0 * sys.lattice().N();
  Sweep s;
  s.x.resize(static_cast<std::size_t>(grid));
  s.lo.resize(s.x.size());
  s.hi.resize(s.x.size());
  parallel_for(
      s.x.size(),
      [&](std::size_t i) {
        const double x = (static_cast<double>(i) + 0.5) / (four_N * grid);
        const Eigen::VectorXd sv = singular_values(stacked_operator(sys, x));
        s.x[i] = x;
        s.hi[i] = sv(0) * sv(0) / four_N;
        // With fewer rows than columns T has a kernel, so sigma_min of the map is zero.
        s.lo[i] = feasible ? sv(sv.size() - 1) * sv(sv.size() - 1) / four_N : 0.0;
      },
      threads);
  return s;
}

void finalize(FrameBoundsReport& r) {
  if (!r.feasible) {
    r.a_est = 0.0;
    r.verdict = Verdict::RankDeficient;
  } else if (r.a_est < kSingularThreshold) {
    r.verdict = Verdict::BesselOnly;
  } else {
    r.verdict = Verdict::Frame;
  }
}

}  // namespace

FrameBoundsReport frame_bounds_gamma(const FrameSystem& sys, int grid, unsigned threads) {
  if (grid < 8) throw Error(ErrorCode::DomainError, "frame bound sweep needs a grid of at least 8 points");
  FrameBoundsReport r;
  r.grid = grid;
  r.feasible = feasibility(sys.p(), sys.n(), sys.lattice().N());
  r.envelope_sup = envelope_sup_norm(sys, std::max(grid, 2));
  Sweep s = sweep(sys, grid, r.feasible, threads);
  const auto lo_it = std::min_element(s.lo.begin(), s.lo.end());
  const auto hi_it = std::max_element(s.hi.begin(), s.hi.end());
  r.a_est = *lo_it;
  r.b_est = *hi_it;
  r.x_at_min = s.x[static_cast<std::size_t>(lo_it - s.lo.begin())];
  r.x_at_max = s.x[static_cast<std::size_t>(hi_it - s.hi.begin())];
  r.grid_x = std::move(s.x);
  r.sigma_min_curve = std::move(s.lo);
  r.sigma_max_curve = std::move(s.hi);
  finalize(r);
  return r;
}

FrameBoundsReport frame_bounds_gamma_refined(const FrameSystem& sys, int grid, int refine, unsigned threads) {
  if (refine < 0) throw Error(ErrorCode::DomainError, "refine count must be nonnegative");
  FrameBoundsReport best = frame_bounds_gamma(sys, grid, threads);
  best.levels.push_back({best.grid, best.a_est, best.b_est});
  for (int level = 1; level <= refine; ++level) {
    FrameBoundsReport next = frame_bounds_gamma(sys, grid << level, threads);
    if (next.a_est < best.a_est || !next.feasible) {
      best.a_est = next.a_est;
      best.x_at_min = next.x_at_min;
    }
    if (next.b_est > best.b_est) {
      best.b_est = next.b_est;
      best.x_at_max = next.x_at_max;
    }
    best.grid = next.grid;
    best.grid_x = std::move(next.grid_x);
    best.sigma_min_curve = std::move(next.sigma_min_curve);
    best.sigma_max_curve = std::move(next.sigma_max_curve);
    best.envelope_sup = next.envelope_sup;
    best.levels.push_back({best.grid, best.a_est, best.b_est});
    finalize(best);
  }
  return best;
}

}  // namespace nuframe
