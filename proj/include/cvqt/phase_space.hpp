#pragma once
// Elementary transforms on conjugate phase-space coordinates xi = w + i z:
// the two-mode Bogoliubov mixing induced by squeezing, beam-splitter
// rotations, and displacement phase factors.

#include <utility>

#include "cvqt/linalg.hpp"
#include "cvqt/types.hpp"

namespace cvqt {

/// Two-mode squeezing acting on conjugate variables:
///   xi'_i = cosh(r) xi_i + e^{i phi} sinh(r) conj(xi_j),  (i,j) = (A,B),(B,A).
std::pair<cplx, cplx> bogoliubov_pair(cplx xi_a, cplx xi_b, double r, double phi);

/// Single-mode analogue: xi' = cosh(s) xi + e^{i phi_s} sinh(s) conj(xi).
cplx bogoliubov_single(cplx xi, double s, double phi_s);

/// Beam-splitter rotation (xi_u, xi_v) = (cos T xi_a - sin T xi_b,
///                                        sin T xi_a + cos T xi_b).
std::pair<cplx, cplx> beam_split(cplx xi_a, cplx xi_b, double theta);

/// Phase factor picked up by the characteristic function under displacement
/// by alpha = x' + i p':  e^{2i (z x' - w p')}.  Unit modulus by construction.
cplx displacement_phase(cplx xi, cplx alpha);

/// Real 2x2 representation of the single-mode Bogoliubov map acting on
/// (w, z); symmetric with unit determinant.
Mat<2, 2> bogoliubov_single_matrix(double s, double phi_s);

/// Real 4x4 representation of the two-mode Bogoliubov map acting on
/// (w_A, z_A, w_B, z_B).
Mat<4, 4> bogoliubov_pair_matrix(double r, double phi);

}  // namespace cvqt
