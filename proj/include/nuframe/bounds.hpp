#pragma once

// Bessel and frame bound estimates. Grid extrema stand in for essential sup/inf;
// every report carries the grid it was computed on.

#include <string_view>
#include <vector>

#include "nuframe/frame.hpp"

namespace nuframe {

struct SupNormEstimate {
  double value = 0.0;
  int j_at_max = 0;
  double x_at_max = 0.0;
  int grid = 0;  // points per Omega branch
};

/// max over j and M midpoints per Omega branch of ||F(f_j)(x)||_F. A lower estimate of the
/// essential supremum.
SupNormEstimate envelope_sup_norm(const FrameSystem& sys, int grid);

/// 2^{p-1} b^2 n^2.
double bessel_sufficient_bound(int p, int n, double b_sup);

struct NecessaryBounds {
  double proof_constant = 0.0;   // 2 sqrt(N b0)
  double stated_constant = 0.0;  // N + b0
};

NecessaryBounds bessel_necessary_bounds(int N, double b0);

/// 2p >= 4N n^2: the stacked operator can only be bounded below when it has at least as
/// many rows as columns.
bool feasibility(int p, int n, int N) noexcept;

enum class Verdict { Frame, BesselOnly, RankDeficient };

std::string_view verdict_name(Verdict v) noexcept;

struct RefinementLevel {
  int grid = 0;
  double a_est = 0.0;
  double b_est = 0.0;
};

struct FrameBoundsReport {
  double a_est = 0.0;
  double b_est = 0.0;
  bool feasible = false;
  int grid = 0;
  double x_at_min = 0.0;
  double x_at_max = 0.0;
  std::vector<double> grid_x;
  std::vector<double> sigma_min_curve;  // sigma_min(T(x))^2 / 4N
  std::vector<double> sigma_max_curve;  // sigma_max(T(x))^2 / 4N
  Verdict verdict = Verdict::RankDeficient;
  SupNormEstimate envelope_sup;
  /// Only filled by the refining sweep; bounds at each level are taken over the union of
  /// all grids up to that level.
  std::vector<RefinementLevel> levels;
};

/// Sweeps x_i = (i + 1/2)/(4N M), i < M, and takes extremal singular values of T(x).
FrameBoundsReport frame_bounds_gamma(const FrameSystem& sys, int grid, unsigned threads = 0);

/// Runs the sweep at M, 2M, ..., 2^refine M. a_est is nonincreasing and b_est nondecreasing
/// across levels; the returned curves belong to the finest grid.
FrameBoundsReport frame_bounds_gamma_refined(const FrameSystem& sys, int grid, int refine, unsigned threads = 0);

}  // namespace nuframe
