#pragma once

// Sampled-spectrum matrices Gamma_{m,k}(x) and the stacked operator
// T(x) = [Gamma_{1,1}(x)^*, ..., Gamma_{n,n}(x)^*] acting on C^{4N n^2}.
//
// For x in [0, 1/4N) the 4N sample points are x + g/4N (g < 2N) followed by
// x + N/2 + g/4N; together over x they cover Omega exactly once.

#include "nuframe/frame.hpp"

namespace nuframe {

/// E(x) = [E1(x); E1(x)], E1_g = e^{4 pi i r (x + g/4N)}. The upper block repeats E1
/// verbatim; it coincides with re-evaluation at x + N/2 because rN is an integer.
CVector phase_vector(const SpectralLattice& L, double x);

/// Sample point for slot g in [0, 4N).
double sample_point(const SpectralLattice& L, double x, int slot) noexcept;

/// Upsilon_{j,m,k}(x): entry (m,k) of F(f_j) at the 4N sample points.
CVector upsilon(const FrameSystem& sys, int j, int m, int k, double x);

/// G_{f_{m,k}}(x) for a time-domain signal.
CVector g_vector(const MatrixSeq& f, int m, int k, double x);
/// G_{f_{m,k}}(x) for a step spectrum.
CVector g_vector(const SpectrumStep& F, int m, int k, double x);

/// All blocks G_{f_{m,k}}(x) stacked in (m,k) order, m outer; length 4N n^2.
CVector stacked_signal(const MatrixSeq& f, double x);
CVector stacked_signal(const SpectrumStep& F, double x);

/// 4N x 2p matrix with columns Upsilon_1, Psi_1, ..., Upsilon_p, Psi_p, Psi_j = E (.) Upsilon_j.
CMatrix gamma_matrix(const FrameSystem& sys, int m, int k, double x);

/// Gamma_{m,k}(x) Gamma_{m',k'}(x)^*, computed, never assumed.
CMatrix gamma_gram(const FrameSystem& sys, int m, int k, int m2, int k2, double x);

/// 2p x 4N n^2 matrix whose (m,k) column block is Gamma_{m,k}(x)^*.
CMatrix stacked_operator(const FrameSystem& sys, double x);

/// Two-branch pairing X_j(x) = sum_{m,k} F(f)(x) conj(F(f_j)(x)) + same at x + N/2.
Complex chi_sum(const FrameSystem& sys, const MatrixSeq& f, int j, double x);

/// |4N frame_sum - Q_M(int_0^{1/4N} |T(x) G(x)|^2 dx)| / max(1, 4N frame_sum),
/// Q_M an M-node Gauss-Legendre rule.
double identity_residual(const FrameSystem& sys, const MatrixSeq& f, int nodes);

/// Singular values of A in descending order, via the eigenvalues of the smaller Gram
/// (A A^* or A^* A). Returns min(rows, cols) values.
Eigen::VectorXd singular_values(const CMatrix& A);

}  // namespace nuframe
