#pragma once
// Resource-parameter optimization for maximum teleportation fidelity, and
// root-finding for the classical noise threshold.
//
// The fidelity is linear in the resource characteristic function, so for the
// superposition families it is an exact quadratic form in the superposition
// coefficients. The optimizers first measure that form with a handful of
// fully converged quadrature evaluations, then search the cheap closed
// objective (grid + golden section in 1-D, Nelder-Mead in 2-D), and finally
// re-evaluate the winner with an independent direct quadrature call as a
// consistency guard.

#include <map>
#include <string>

#include "cvqt/overlap.hpp"

namespace cvqt {

struct OptResult {
    double f_opt = 0.0;
    std::map<std::string, double> argmax;
    int evaluations = 0;   // underlying objective/quadrature evaluations
    bool converged = false;
};

/// Maximize fidelity over the Bell superposition angle delta in [0, pi)
/// (theta = 0), optionally with a thermal embedding.
OptResult optimize_bell(double r, const InputStateSpec& input,
                        const ThermalContext& ctx = {},
                        const QuadratureConfig& cfg = {});

/// Maximize fidelity over the two-angle coefficient sphere
/// (c0, c1, c2) = (cos d1, sin d1 cos d2, sin d1 sin d2) of the
/// second-order Schmidt superposition; Nelder-Mead from a 32x32 grid seed.
OptResult optimize_sssf(double r, const InputStateSpec& input,
                        const QuadratureConfig& cfg = {});

/// Restricted 1-D search along the geometric-progression curve
/// (c0, c1, c2) proportional to (1, x, x^2), x in [0, 0.999].
OptResult sssf_curve_max(double r, const InputStateSpec& input,
                         const QuadratureConfig& cfg = {});

/// Maximize the even-cat fidelity over |gamma| in (0, 8] for a coherent
/// input (analytic objective); converged=false flags a boundary maximum.
OptResult optimize_cat(double r, const ThermalContext& ctx = {});

/// Smallest thermal occupation n_th (equal on both modes) at which the
/// optimized fidelity drops to 1/2; bisection on [0, 2] to 1e-8 with the
/// family re-optimized at every iterate. Supported families: TMSV,
/// SqueezedBell, SqueezedCat (coherent input).
double classical_threshold(ResourceSpec::Family family, double r);

}  // namespace cvqt
