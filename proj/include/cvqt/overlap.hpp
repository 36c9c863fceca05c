#pragma once
// Phase-space trace integrals: teleportation fidelity, purity and state
// overlaps, all via tensor Gauss-Hermite quadrature.
//
// Node placement: every integrand handled here is (polynomial or bounded
// oscillation) x exp(-v^T Q v) with Q composed exactly from the evaluators'
// Gaussian cores through the protocol argument maps. The engine
// eigendecomposes Q, aligns the quadrature axes with the eigenvectors and
// scales each axis by 1/(mu sqrt(lambda)) with a safety margin mu < 1, so
// squeezed/rotated envelopes need no hand tuning. Results are checked by
// order doubling and summed pairwise in a fixed order (deterministic).

#include <functional>

#include "cvqt/protocol.hpp"

namespace cvqt {

struct QuadratureConfig {
    int order;             // nodes per axis, 2-D integrals
    int order4;            // nodes per axis, 4-D integrals
    double envelope_scale; // > 0: isotropic envelope override exp(-a sum v^2)
    double convergence;    // relative doubling tolerance; <= 0 disables

    QuadratureConfig();
};

/// Single-mode characteristic evaluator plus the Gaussian core of its decay.
struct Chi1 {
    std::function<cplx(cplx)> chi;
    Sym2 env;
};

/// Two-mode analogue in v = (w_A, z_A, w_B, z_B).
struct Chi2 {
    std::function<cplx(cplx, cplx)> chi;
    Sym4 env;
};

Chi1 make_chi(const InputStateSpec& spec);
Chi2 make_chi(const ResourceSpec& spec);

/// Teleportation fidelity F = pi^{-1} Int chi_in(xi) chi_out(-xi) dw dz.
/// Mixture inputs are integrated directly (the evaluator is linear in the
/// components); see fidelity_mixture_bilinear for the expanded double sum.
double fidelity(const ChannelSpec& channel, const InputStateSpec& input,
                const ResourceSpec& resource, const QuadratureConfig& cfg = {});

/// Same quantity with a mixture input expanded into the bilinear double sum
/// over components, each cross term integrated with its own exact envelope.
double fidelity_mixture_bilinear(const ChannelSpec& channel,
                                 const InputStateSpec& input,
                                 const ResourceSpec& resource,
                                 const QuadratureConfig& cfg = {});

/// Convex combination of resources: fidelity is linear in the resource
/// characteristic function, so this is the weighted average of fidelities.
double fidelity_resource_mixture(
    const ChannelSpec& channel, const InputStateSpec& input,
    const std::vector<std::pair<double, ResourceSpec>>& parts,
    const QuadratureConfig& cfg = {});

/// Tr rho^2 = pi^{-n} Int |chi|^2.
double purity(const Chi1& chi, const QuadratureConfig& cfg = {});
double purity(const Chi2& chi, const QuadratureConfig& cfg = {});
double purity(const InputStateSpec& spec, const QuadratureConfig& cfg = {});
double purity(const ResourceSpec& spec, const QuadratureConfig& cfg = {});

/// Tr(rho1 rho2) = pi^{-n} Int chi1(xi) chi2(-xi).
double state_overlap(const Chi1& a, const Chi1& b,
                     const QuadratureConfig& cfg = {});
double state_overlap(const Chi2& a, const Chi2& b,
                     const QuadratureConfig& cfg = {});

// Low-level entry points (used by the optimizer and the measures):
cplx integrate_r2(const std::function<cplx(double, double)>& f, const Sym2& q,
                  const QuadratureConfig& cfg);
cplx integrate_r4(const std::function<cplx(double, double, double, double)>& f,
                  const Sym4& q, const QuadratureConfig& cfg);

}  // namespace cvqt
