#pragma once

// Perturbation criteria: given frame bounds (a0, b0) of {D f_j}, decide from the spectra of
// a second family g_j whether {D g_j} is a frame and with which bounds.

#include <string_view>
#include <vector>

#include "nuframe/frame.hpp"

namespace nuframe {

enum class PerturbMode { Absolute, Relative };

std::string_view perturb_mode_name(PerturbMode m) noexcept;

struct PerturbReport {
  PerturbMode mode = PerturbMode::Absolute;
  double a0 = 0.0;
  double b0 = 0.0;
  int p = 0;
  int n = 0;
  int N = 0;
  /// Grid max of the criterion; a lower estimate of the essential supremum.
  double epsilon_measured = 0.0;
  int j_at_max = 0;
  double x_at_max = 0.0;
  std::vector<double> epsilon_per_envelope;
  /// Absolute: 2^{p-1} eps^2 n^2. Relative: 2^{p-1} eps^2 (N + b0)^2 n^2.
  double condition_value = 0.0;
  bool condition_holds = false;
  /// Literal left inequality of the absolute hypothesis chain, eps < 2^{p-1} eps^2 n^2.
  /// Recorded only; it does not enter condition_holds.
  bool epsilon_below_condition = false;
  double new_lower = 0.0;
  double new_upper = 0.0;
  int grid = 0;
};

struct PerturbedBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// ((sqrt(a0) - sqrt(2^{p-1} eps^2 n^2))^2, 2^p eps^2 n^2 + 2 b0).
PerturbedBounds absolute_perturbed_bounds(double a0, double b0, int p, int n, double eps);

/// Same with eps replaced by eps (N + b0).
PerturbedBounds relative_perturbed_bounds(double a0, double b0, int p, int n, int N, double eps);

/// eps = max over grid and j of ||F(f_j)(x) + F(g_j)(x)||_F.
PerturbReport check_absolute(const FrameSystem& sysF, const FrameSystem& sysG, double a0, double b0, int grid = 4096);

/// eps = max over grid and j of ||F(g_j)(x) - F(f_j)(x)|| / ||F(f_j)(x)||. Throws
/// VanishingEnvelopeSpectrum when a denominator drops below 1e-12.
PerturbReport check_relative(const FrameSystem& sysF, const FrameSystem& sysG, double a0, double b0, int grid = 4096);

}  // namespace nuframe
