#include "cvqt/protocol.hpp"

#include <cmath>

namespace cvqt {

namespace {

/// Gaussian factors the channel itself multiplies in, written as diagonal
/// contributions a_w w^2 + a_z z^2 to the envelope exponent.
void channel_gauss_coeffs(const ChannelSpec& c, double& a_w, double& a_z) {
    a_w = a_z = 0.0;
    if (c.variant == ChannelSpec::Variant::ImpreciseMeasurement) {
        a_w = 2.0 * std::exp(-2.0 * c.s_m) * c.gp * c.gp;
        a_z = 2.0 * std::exp(-2.0 * c.r_m) * c.gx * c.gx;
    } else if (c.variant == ChannelSpec::Variant::LossyHomodyne) {
        const double sx = std::sin(c.phi_x), sp = std::sin(c.phi_p);
        a_z = 2.0 * c.ext_u.nbar * c.ext_u.nbar * std::exp(-2.0 * c.ext_u.s) *
              sx * sx;
        a_w = 2.0 * c.ext_v.nbar * c.ext_v.nbar * std::exp(2.0 * c.ext_v.s) *
              sp * sp;
    }
}

double channel_gauss(const ChannelSpec& c, double w, double z) {
    double a_w, a_z;
    channel_gauss_coeffs(c, a_w, a_z);
    if (a_w == 0.0 && a_z == 0.0) return 1.0;
    return std::exp(-a_w * w * w - a_z * z * z);
}

/// Argument maps of the channel: the input is evaluated at
/// (in_w w, i in_z z) and the resource at (res_w w - i res_z z, b_w w + i b_z z).
struct ArgMaps {
    double in_w, in_z;
    double res_w, res_z;
    double b_w, b_z;
};

ArgMaps arg_maps(const ChannelSpec& c) {
    switch (c.variant) {
        case ChannelSpec::Variant::AsymmetricBS: {
            const double t = std::tan(c.theta);
            return {c.gp * t, c.gx / t, c.gp, c.gx, t, 1.0 / t};
        }
        case ChannelSpec::Variant::LossyHomodyne: {
            const double cx = std::cos(c.phi_x), cp = std::cos(c.phi_p);
            return {cp, cx, cp, cx, 1.0, 1.0};
        }
        default:
            return {c.gp, c.gx, c.gp, c.gx, 1.0, 1.0};
    }
}

}  // namespace

ChannelSpec ChannelSpec::ideal(double gx, double gp) {
    ChannelSpec c;
    c.variant = Variant::Ideal;
    c.gx = gx;
    c.gp = gp;
    return c;
}

ChannelSpec ChannelSpec::asymmetric_bs(double theta, double gx, double gp) {
    ChannelSpec c;
    c.variant = Variant::AsymmetricBS;
    c.theta = theta;
    c.gx = gx;
    c.gp = gp;
    return c;
}

ChannelSpec ChannelSpec::imprecise(double r_m, double s_m, double gx, double gp) {
    ChannelSpec c;
    c.variant = Variant::ImpreciseMeasurement;
    c.r_m = r_m;
    c.s_m = s_m;
    c.gx = gx;
    c.gp = gp;
    return c;
}

ChannelSpec ChannelSpec::lossy_homodyne(double phi_x, double phi_p, ExtMode u,
                                        ExtMode v) {
    ChannelSpec c;
    c.variant = Variant::LossyHomodyne;
    c.phi_x = phi_x;
    c.phi_p = phi_p;
    c.ext_u = u;
    c.ext_v = v;
    return c;
}

void validate(const ChannelSpec& spec) {
    require_finite(spec.gx, "gx");
    require_finite(spec.gp, "gp");
    if (!(spec.gx > 0.0 && spec.gx <= 1.0) || !(spec.gp > 0.0 && spec.gp <= 1.0))
        throw SpecError("gains must lie in (0, 1]");
    if (spec.variant == ChannelSpec::Variant::AsymmetricBS) {
        const double t = std::tan(spec.theta);
        if (!std::isfinite(t) || t < 1e-9 || t > 1e9)
            throw SpecError("beam-splitter angle gives a degenerate tan/cot pair");
    }
    if (spec.variant == ChannelSpec::Variant::LossyHomodyne &&
        (spec.gx != 1.0 || spec.gp != 1.0))
        throw SpecError("lossy homodyne is defined only at unit gains");
    if (spec.ext_u.nbar < 0.0 || spec.ext_v.nbar < 0.0)
        throw SpecError("external-mode occupation must be nonnegative");
}

cplx output_chi(const ChannelSpec& channel, const InputStateSpec& input,
                const ResourceSpec& resource, cplx xi_b) {
    const ArgMaps a = arg_maps(channel);
    const double w = xi_b.real(), z = xi_b.imag();
    const cplx in_arg{a.in_w * w, a.in_z * z};
    const cplx res_arg1{a.res_w * w, -a.res_z * z};
    const cplx res_arg2{a.b_w * w, a.b_z * z};
    return chi_input(input, in_arg) * chi_resource(resource, res_arg1, res_arg2) *
           channel_gauss(channel, w, z);
}

Sym2 output_envelope(const ChannelSpec& channel, const InputStateSpec& input,
                     const ResourceSpec& resource) {
    const ArgMaps a = arg_maps(channel);
    Mat<2, 2> l_in;
    l_in(0, 0) = a.in_w;
    l_in(1, 1) = a.in_z;
    Mat<4, 2> l_res;
    l_res(0, 0) = a.res_w;
    l_res(1, 1) = -a.res_z;
    l_res(2, 0) = a.b_w;
    l_res(3, 1) = a.b_z;
    Sym2 q = congruence(l_in, input_envelope(input));
    q += congruence(l_res, resource_envelope(resource));
    double a_w, a_z;
    channel_gauss_coeffs(channel, a_w, a_z);
    q(0, 0) += a_w;
    q(1, 1) += a_z;
    return q;
}

namespace testhook {

cplx output_chi_epr(const ChannelSpec& channel, const InputStateSpec& input,
                    cplx xi_b) {
    const ArgMaps a = arg_maps(channel);
    const double w = xi_b.real(), z = xi_b.imag();
    return chi_input(input, cplx{a.in_w * w, a.in_z * z}) *
           channel_gauss(channel, w, z);
}

}  // namespace testhook

}  // namespace cvqt
