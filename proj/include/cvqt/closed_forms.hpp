#pragma once
// Analytic teleportation fidelities for the Bell-superposition and cat-state
// resource families with a coherent-state input, plus the closed-form optimal
// superposition angles. These serve as independent cross-checks for the
// quadrature engine and as cheap objectives for threshold searches.

#include "cvqt/types.hpp"

namespace cvqt {

/// Bell-superposition resource against thermal noise; delta is the
/// superposition angle. At delta = 0 and zero occupation this reduces to the
/// two-mode squeezed vacuum value 1/(1 + e^{-2r}).
double fidelity_bell_thermal(double r, const ThermalContext& ctx, double delta);

/// Two-mode squeezed vacuum against thermal noise: 1/(e^{-2r} + f).
double fidelity_tmsv_thermal(double r, const ThermalContext& ctx);

/// Squeezed cat-like resource, zero relative phase, complex amplitude gamma.
double fidelity_cat(double r, double delta, cplx gamma);

/// Even (delta = pi/4) cat with real amplitude magnitude.
double fidelity_cat_simplified(double r, double gamma_abs);

/// Even cat against thermal noise.
double fidelity_cat_thermal(double r, const ThermalContext& ctx,
                            double gamma_abs);

/// Optimal Bell angles: coherent input, Fock input, and coherent input with
/// thermal noise. delta_opt_fock(0) is the limit pi/4.
double delta_opt_coherent(double r);
double delta_opt_fock(double r);
double delta_opt_coherent_thermal(double r, const ThermalContext& ctx);

}  // namespace cvqt
