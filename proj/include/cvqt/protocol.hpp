#pragma once
// Teleportation-channel composition: maps the input and resource
// characteristic functions into the output-state characteristic function
// chi_out(xi_B), for the ideal protocol and its noisy/lossy variants.

#include "cvqt/states.hpp"

namespace cvqt {

/// Auxiliary external mode entering through a lossy homodyne detector:
/// squeezed thermal with chi(xi) = exp(-nbar^2 (e^{-2s} z^2 + e^{2s} w^2)).
struct ExtMode {
    double nbar = 0.0;
    double s = 0.0;
};

struct ChannelSpec {
    enum class Variant {
        Ideal,
        AsymmetricBS,           // unbalanced entangling beam splitter
        ImpreciseMeasurement,   // Gaussian-blurred quadrature measurement
        LossyHomodyne           // detector losses + external squeezed thermal modes
    };

    Variant variant = Variant::Ideal;
    double gx = 1.0, gp = 1.0;   // correction gains, in (0, 1]
    double theta = kPi / 4.0;    // AsymmetricBS mixing angle
    double r_m = 0.0, s_m = 0.0; // ImpreciseMeasurement Gaussian widths
    double phi_x = 0.0;          // LossyHomodyne: loss angle on the x-type arm
    double phi_p = 0.0;          // LossyHomodyne: loss angle on the p-type arm
    ExtMode ext_u, ext_v;        // external modes entering the two arms

    static ChannelSpec ideal(double gx = 1.0, double gp = 1.0);
    static ChannelSpec asymmetric_bs(double theta, double gx = 1.0, double gp = 1.0);
    static ChannelSpec imprecise(double r_m, double s_m, double gx = 1.0,
                                 double gp = 1.0);
    static ChannelSpec lossy_homodyne(double phi_x, double phi_p, ExtMode u,
                                      ExtMode v);
};

/// Throws SpecError for gains outside (0, 1], a degenerate beam-splitter
/// angle, or nonunit gains combined with the lossy variant (undefined).
void validate(const ChannelSpec& spec);

/// chi of the teleported output state at xi_B.
cplx output_chi(const ChannelSpec& channel, const InputStateSpec& input,
                const ResourceSpec& resource, cplx xi_b);

/// Gaussian envelope form of chi_out in v = (w, z) of its argument,
/// composed exactly from the input/resource envelopes through the channel's
/// real-linear argument maps (plus any channel Gaussian factors).
Sym2 output_envelope(const ChannelSpec& channel, const InputStateSpec& input,
                     const ResourceSpec& resource);

namespace testhook {
/// Output chi against the formal infinite-squeezing resource (chi_AB == 1).
/// Not constructible as a ResourceSpec: it is not square-integrable and
/// would poison quadrature; tests use it pointwise only.
cplx output_chi_epr(const ChannelSpec& channel, const InputStateSpec& input,
                    cplx xi_b);
}  // namespace testhook

}  // namespace cvqt
