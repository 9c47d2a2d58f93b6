#include "nuframe/perturb.hpp"

#include <cmath>
#include <string>

#include "nuframe/errors.hpp"

namespace nuframe {

std::string_view perturb_mode_name(PerturbMode m) noexcept {
  return m == PerturbMode::Absolute ? "absolute" : "relative";
}

PerturbedBounds absolute_perturbed_bounds(double a0, double b0, int p, int n, double eps) {
  const double c = std::ldexp(eps * eps * n * n, p - 1);
  if (c == 0.0) return {a0, 2.0 * b0};
  const double root = std::sqrt(a0) - std::sqrt(c);
  return {root * root, 2.0 * c + 2.0 * b0};
}

PerturbedBounds relative_perturbed_bounds(double a0, double b0, int p, int n, int N, double eps) {
  return absolute_perturbed_bounds(a0, b0, p, n, eps * (N + b0));
}

namespace {

void require_matching(const FrameSystem& F, const FrameSystem& G, double a0, double b0) {
  if (!(F.lattice() == G.lattice()) || F.n() != G.n() || F.p() != G.p())
    throw Error(ErrorCode::ShapeMismatch, "perturbed family must share lattice, n and p with the original");
  if (!(a0 > 0.0) || !(b0 > 0.0)) throw Error(ErrorCode::DomainError, "frame bounds a0, b0 must be positive");
}

template <class Measure>
PerturbReport measure(const FrameSystem& F, const FrameSystem& G, double a0, double b0, int grid, PerturbMode mode,
                      Measure&& pointwise) {
  require_matching(F, G, a0, b0);
  if (grid < 2) throw Error(ErrorCode::DomainError, "perturbation grid needs at least 2 points per branch");
  PerturbReport r;
  r.mode = mode;
  r.a0 = a0;
  r.b0 = b0;
  r.p = F.p();
  r.n = F.n();
  r.N = F.lattice().N();
  r.grid = grid;
  r.epsilon_per_envelope.assign(static_cast<std::size_t>(r.p), 0.0);
  r.epsilon_measured = -1.0;
  const double upper = 0.5 * r.N;
  for (int branch = 0; branch < 2; ++branch)
    for (int i = 0; i < grid; ++i) {
      const double x = (branch == 0 ? 0.0 : upper) + (i + 0.5) / (2.0 * grid);
      for (int j = 0; j < r.p; ++j) {
        const double v = pointwise(F.envelope_spectrum(j, x), G.envelope_spectrum(j, x), j, x);
        double& per = r.epsilon_per_envelope[static_cast<std::size_t>(j)];
        per = std::max(per, v);
        if (v > r.epsilon_measured) {
          r.epsilon_measured = v;
          r.j_at_max = j;
          r.x_at_max = x;
        }
      }
    }
  return r;
}

}  // namespace

PerturbReport check_absolute(const FrameSystem& sysF, const FrameSystem& sysG, double a0, double b0, int grid) {
  PerturbReport r = measure(sysF, sysG, a0, b0, grid, PerturbMode::Absolute,
                            [](const CMatrix& f, const CMatrix& g, int, double) { return matrix_frobenius_norm(f + g); });
  const double eps = r.epsilon_measured;
  r.condition_value = std::ldexp(eps * eps * r.n * r.n, r.p - 1);
  r.condition_holds = r.condition_value < a0;
  r.epsilon_below_condition = eps < r.condition_value;
  const PerturbedBounds nb = absolute_perturbed_bounds(a0, b0, r.p, r.n, eps);
  r.new_lower = nb.lower;
  r.new_upper = nb.upper;
  return r;
}

PerturbReport check_relative(const FrameSystem& sysF, const FrameSystem& sysG, double a0, double b0, int grid) {
  PerturbReport r = measure(sysF, sysG, a0, b0, grid, PerturbMode::Relative,
                            [](const CMatrix& f, const CMatrix& g, int j, double x) {
                              const double denom = matrix_frobenius_norm(f);
                              if (denom < 1e-12)
                                throw Error(ErrorCode::VanishingEnvelopeSpectrum,
                                            "||F(f_" + std::to_string(j) + ")(x)|| vanishes at x=" + std::to_string(x));
                              return matrix_frobenius_norm(g - f) / denom;
                            });
  const double eps = r.epsilon_measured;
  const double scale = r.N + b0;
  r.condition_value = std::ldexp(eps * eps * scale * scale * r.n * r.n, r.p - 1);
  // eps^2 < a0 / (2^{p-1} (N + b0)^2 n^2)
  r.condition_holds = r.condition_value < a0;
  r.epsilon_below_condition = eps < r.condition_value;
  const PerturbedBounds nb = relative_perturbed_bounds(a0, b0, r.p, r.n, r.N, eps);
  r.new_lower = nb.lower;
  r.new_upper = nb.upper;
  return r;
}

}  // namespace nuframe
