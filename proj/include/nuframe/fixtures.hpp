#pragma once

// Concrete systems: the two-point Pauli-pattern family on N=2, r=1, its perturbation,
// the step-spectrum counterexample to the lower frame bound, and the canonical basis
// of l^2(Z) used to calibrate the Gamma machinery.

#include <string>
#include <vector>

#include "nuframe/frame.hpp"

namespace nuframe::fixtures {

/// N=2, r=1, n=2, p=8. Envelopes 1-4 live on lambda in {0, 4}, 5-8 on {1/2, 1/2+4}.
FrameSystem exam1();

/// The eight g_j paired with exam1, entries as printed (including g_3(0)).
FrameSystem exam1_perturbed();

struct Counterexample {
  FrameSystem system;  // p = 2, n = 2, step form, K = 1
  SpectrumStep test_spectrum;
};

/// Envelopes sqrt(2N) 1_[0,1/4N) times I and sigma_x; test spectrum
/// 1_[0,1/4N) + (1/a0) 1_[1/4N, 2/4N) in every entry.
Counterexample counterexample(int N, int r, double a0);

/// N=1, r=1, n=1, p=2, envelopes delta_0 and delta_1: shifts enumerate the standard basis of l^2(Z).
FrameSystem onb_fixture();

/// Names accepted by the CLI exporter.
std::vector<std::string> names();

}  // namespace nuframe::fixtures
