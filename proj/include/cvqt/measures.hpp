#pragma once
// Resource-property measures: moment-based inseparability, entanglement
// entropy of the partial trace, non-Gaussianity as a normalized
// Hilbert-Schmidt distance to the matched Gaussian, and the maximized
// overlap with squeezed vacuum ("affinity").

#include "cvqt/overlap.hpp"
#include "cvqt/states.hpp"

namespace cvqt {

/// Normally ordered single- and two-mode moments of a (possibly thermally
/// embedded) resource. first_a/first_b are <a> per mode.
struct SecondMoments {
    double n_a = 0.0;    // <a^dag a> mode A
    double n_b = 0.0;    // <a^dag a> mode B
    cplx cross;          // <a_A a_B>
    cplx first_a;        // <a_A>
    cplx first_b;        // <a_B>
};

/// Moments via Richardson-extrapolated central finite differences of the
/// characteristic function at the origin (step h, refined at h/2 and h/4).
SecondMoments second_moments(const ResourceSpec& resource, double h = 1e-2);

/// Independent route: the same moments summed directly in the Fock basis.
/// Requires a pure resource.
SecondMoments second_moments_fock(const ResourceSpec& resource);

/// Delta = n_A n_B - |<a_A a_B>|^2; negative values witness inseparability.
double inseparability_delta(const ResourceSpec& resource);

/// Entanglement entropy (bits) of the partial trace of a pure resource,
/// computed exactly from the eigenvalues of the reduced density matrix.
double von_neumann_entropy(const ResourceSpec& resource);

/// d_nG = [Tr rho^2 + Tr rho_G^2 - 2 Tr(rho rho_G)] / (2 Tr rho^2) against
/// the Gaussian state with the same first moments and covariance matrix.
/// Pure resources only.
double non_gaussianity(const ResourceSpec& resource,
                       const QuadratureConfig& cfg = {});

struct AffinityResult {
    double g = 0.0;        // maximized squared overlap
    double s_star = 0.0;   // maximizing squeezing parameter
    bool at_boundary = false;
};

/// G = max_{s in [0, s_max]} |<two-mode squeezed vacuum(s) | psi>|^2 for a
/// pure resource, via golden-section search on the Fock-basis overlap.
AffinityResult vacuum_affinity(const ResourceSpec& resource,
                               double s_max = 5.0);

/// (F_opt - F_ref) / F_ref.
double relative_fidelity(double f_opt, double f_ref);

// Exposed for tests: the Gaussian reference evaluator (characteristic
// function + envelope) built from the moments of `resource`, and the
// analytic purity of that Gaussian.
Chi2 gaussian_reference(const ResourceSpec& resource, double h = 1e-2);
double gaussian_reference_purity(const ResourceSpec& resource,
                                 double h = 1e-2);

}  // namespace cvqt
