#include "cvqt/states.hpp"

#include <cmath>

#include "cvqt/phase_space.hpp"

namespace cvqt {

namespace {

double abs2(cplx v) { return std::norm(v); }

/// exp(-(|xpA|^2 + |xpB|^2)/2): common Gaussian core after the Bogoliubov
/// substitution.
double env2(cplx xp_a, cplx xp_b) {
    return std::exp(-(abs2(xp_a) + abs2(xp_b)) / 2.0);
}

double thermal_mult(const ResourceSpec& s, cplx xi_a, cplx xi_b) {
    if (s.pure()) return 1.0;
    return std::exp(-s.nth_a * abs2(xi_a) - s.nth_b * abs2(xi_b));
}

/// Generalized Laguerre L_n^{(k)}(x) for n <= 2 (all this module needs).
double laguerre_small(int n, int k, double x) {
    switch (n) {
        case 0: return 1.0;
        case 1: return k + 1.0 - x;
        default:
            return (k + 1.0) * (k + 2.0) / 2.0 - (k + 2.0) * x + x * x / 2.0;
    }
}

/// <m|D(xi)|n> for m, n <= 2 via the explicit Laguerre forms.
cplx d_elem_small(int m, int n, cplx xi) {
    static const double fact[3] = {1.0, 1.0, 2.0};
    const double x = abs2(xi);
    const double e = std::exp(-x / 2.0);
    if (m >= n) {
        cplx pw = 1.0;
        for (int i = 0; i < m - n; ++i) pw *= xi;
        return std::sqrt(fact[n] / fact[m]) * pw * e * laguerre_small(n, m - n, x);
    }
    cplx pw = 1.0;
    for (int i = 0; i < n - m; ++i) pw *= -std::conj(xi);
    return std::sqrt(fact[m] / fact[n]) * pw * e * laguerre_small(m, n - m, x);
}

}  // namespace

// ---------------------------------------------------------------- inputs

InputStateSpec InputStateSpec::coherent(cplx beta) {
    InputStateSpec s;
    s.kind = Kind::Coherent;
    s.beta = beta;
    return s;
}

InputStateSpec InputStateSpec::squeezed_vacuum(double sq, double phi_s) {
    InputStateSpec s;
    s.kind = Kind::SqueezedVacuum;
    s.s = sq;
    s.phi_s = phi_s;
    return s;
}

InputStateSpec InputStateSpec::fock1() {
    InputStateSpec s;
    s.kind = Kind::Fock1;
    return s;
}

InputStateSpec InputStateSpec::squeezed_fock1(double sq, double phi_s) {
    InputStateSpec s;
    s.kind = Kind::SqueezedFock1;
    s.s = sq;
    s.phi_s = phi_s;
    return s;
}

InputStateSpec InputStateSpec::photon_added(cplx beta) {
    InputStateSpec s;
    s.kind = Kind::PhotonAddedCoherent;
    s.beta = beta;
    return s;
}

InputStateSpec InputStateSpec::mixture(
    std::vector<std::pair<double, InputStateSpec>> parts) {
    InputStateSpec s;
    s.kind = Kind::Mixture;
    s.components = std::move(parts);
    return s;
}

void validate(const InputStateSpec& spec) {
    require_finite(spec.beta, "beta");
    require_finite(spec.s, "s");
    require_finite(spec.phi_s, "phi_s");
    if (spec.kind != InputStateSpec::Kind::Mixture) {
        if (!spec.components.empty())
            throw SpecError("components present on a non-mixture input");
        return;
    }
    if (spec.components.empty()) throw SpecError("mixture with no components");
    double total = 0.0;
    for (const auto& [w, part] : spec.components) {
        if (!(w >= 0.0)) throw SpecError("mixture weight must be nonnegative");
        if (part.kind == InputStateSpec::Kind::Mixture)
            throw SpecError("nested mixtures are not supported");
        validate(part);
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw SpecError("mixture weights must sum to 1");
}

cplx chi_input(const InputStateSpec& spec, cplx xi) {
    using K = InputStateSpec::Kind;
    switch (spec.kind) {
        case K::Coherent:
            return std::exp(cplx(-abs2(xi) / 2.0, 0.0)) *
                   displacement_phase(xi, spec.beta);
        case K::SqueezedVacuum: {
            const cplx xp = bogoliubov_single(xi, spec.s, spec.phi_s);
            return std::exp(cplx(-abs2(xp) / 2.0, 0.0));
        }
        case K::Fock1: {
            const double x = abs2(xi);
            return std::exp(-x / 2.0) * (1.0 - x);
        }
        case K::SqueezedFock1: {
            const cplx xp = bogoliubov_single(xi, spec.s, spec.phi_s);
            const double x = abs2(xp);
            return std::exp(-x / 2.0) * (1.0 - x);
        }
        case K::PhotonAddedCoherent: {
            const double b2 = abs2(spec.beta);
            const double im = xi.imag() * spec.beta.real() - xi.real() * spec.beta.imag();
            const cplx pre = std::exp(cplx(-abs2(xi) / 2.0, 2.0 * im));
            return pre * (cplx(1.0 + b2 - abs2(xi), 2.0 * im)) / (1.0 + b2);
        }
        case K::Mixture: {
            cplx acc = 0.0;
            for (const auto& [w, part] : spec.components)
                acc += w * chi_input(part, xi);
            return acc;
        }
    }
    throw SpecError("unknown input kind");
}

Sym2 input_envelope(const InputStateSpec& spec) {
    using K = InputStateSpec::Kind;
    switch (spec.kind) {
        case K::Coherent:
        case K::PhotonAddedCoherent:
        case K::Fock1:
            return Sym2::identity(0.5);
        case K::SqueezedVacuum:
        case K::SqueezedFock1: {
            const Mat<2, 2> m = bogoliubov_single_matrix(spec.s, spec.phi_s);
            return congruence(m, Sym2::identity(0.5));
        }
        case K::Mixture: {
            // |sum w_i chi_i| <= exp(-a |v|^2) with a the weakest component
            // decay; conservative but always valid.
            double a = 1e300;
            for (const auto& [w, part] : spec.components) {
                (void)w;
                a = std::min(a, min_eigenvalue(input_envelope(part)));
            }
            return Sym2::identity(a);
        }
    }
    throw SpecError("unknown input kind");
}

// --------------------------------------------------------------- resources

ResourceSpec ResourceSpec::tmsv(double r, double phi) {
    ResourceSpec s;
    s.family = Family::TMSV;
    s.r = r;
    s.phi = phi;
    return s;
}

ResourceSpec ResourceSpec::squeezed_fock11(double r, double phi) {
    ResourceSpec s;
    s.family = Family::SqueezedFock11;
    s.r = r;
    s.phi = phi;
    return s;
}

ResourceSpec ResourceSpec::photon_subtracted(double r, double phi) {
    ResourceSpec s;
    s.family = Family::PhotonSubtracted;
    s.r = r;
    s.phi = phi;
    return s;
}

ResourceSpec ResourceSpec::photon_added(double r, double phi) {
    ResourceSpec s;
    s.family = Family::PhotonAdded;
    s.r = r;
    s.phi = phi;
    return s;
}

ResourceSpec ResourceSpec::bell(double r, double delta, double theta, double phi) {
    ResourceSpec s;
    s.family = Family::SqueezedBell;
    s.r = r;
    s.phi = phi;
    s.delta = delta;
    s.theta = theta;
    return s;
}

ResourceSpec ResourceSpec::sssf(double r, double c0, double c1, double c2,
                                double theta1, double theta2, double phi) {
    ResourceSpec s;
    s.family = Family::SSSF;
    s.r = r;
    s.phi = phi;
    s.c0 = c0;
    s.c1 = c1;
    s.c2 = c2;
    s.theta1 = theta1;
    s.theta2 = theta2;
    return s;
}

ResourceSpec ResourceSpec::squeezed_cat(double r, double delta, cplx gamma,
                                        double theta, double phi) {
    ResourceSpec s;
    s.family = Family::SqueezedCat;
    s.r = r;
    s.phi = phi;
    s.delta = delta;
    s.theta = theta;
    s.gamma = gamma;
    return s;
}

ResourceSpec ResourceSpec::with_thermal(double na, double nb) const {
    ResourceSpec s = *this;
    s.nth_a = na;
    s.nth_b = nb;
    return s;
}

void validate(const ResourceSpec& spec) {
    require_finite(spec.r, "r");
    require_finite(spec.phi, "phi");
    require_finite(spec.delta, "delta");
    require_finite(spec.theta, "theta");
    require_finite(spec.gamma, "gamma");
    if (!(spec.nth_a >= 0.0) || !(spec.nth_b >= 0.0))
        throw SpecError("thermal occupations must be nonnegative");
    if (spec.family == ResourceSpec::Family::SSSF) {
        const double n2 = spec.c0 * spec.c0 + spec.c1 * spec.c1 + spec.c2 * spec.c2;
        if (!(n2 > 0.0)) throw SpecError("SSSF coefficients must not all vanish");
    }
    if (spec.family == ResourceSpec::Family::SqueezedCat) {
        const double arg = 1.0 + std::exp(-abs2(spec.gamma)) *
                                     std::sin(2.0 * spec.delta) * std::cos(spec.theta);
        if (!(arg > 0.0))
            throw SpecError("squeezed-cat normalization is degenerate");
    }
}

cplx chi_resource(const ResourceSpec& spec, cplx xi_a, cplx xi_b) {
    using F = ResourceSpec::Family;
    const auto [xp_a, xp_b] = bogoliubov_pair(xi_a, xi_b, spec.r, spec.phi);
    const double e0 = env2(xp_a, xp_b);
    const double th = thermal_mult(spec, xi_a, xi_b);

    switch (spec.family) {
        case F::TMSV:
            return e0 * th;
        case F::SqueezedFock11:
            return e0 * (1.0 - abs2(xp_a)) * (1.0 - abs2(xp_b)) * th;
        case F::SqueezedBell: {
            const double cd = std::cos(spec.delta), sd = std::sin(spec.delta);
            const cplx cross = std::polar(1.0, -spec.theta) * xp_a * xp_b;
            const double val = cd * cd + 2.0 * sd * cd * cross.real() +
                               sd * sd * (1.0 - abs2(xp_a)) * (1.0 - abs2(xp_b));
            return e0 * val * th;
        }
        case F::PhotonSubtracted: {
            const double t = std::tanh(spec.r);
            const cplx cross = std::polar(1.0, -spec.phi) * xp_a * xp_b;
            const double val = 1.0 - 2.0 * t * cross.real() +
                               t * t * (1.0 - abs2(xp_a)) * (1.0 - abs2(xp_b));
            return e0 * val / (1.0 + t * t) * th;
        }
        case F::PhotonAdded: {
            const double t = std::tanh(spec.r);
            const cplx cross = std::polar(1.0, -spec.phi) * xp_a * xp_b;
            const double val = t * t - 2.0 * t * cross.real() +
                               (1.0 - abs2(xp_a)) * (1.0 - abs2(xp_b));
            return e0 * val / (1.0 + t * t) * th;
        }
        case F::SSSF: {
            const double n2 =
                spec.c0 * spec.c0 + spec.c1 * spec.c1 + spec.c2 * spec.c2;
            const cplx c[3] = {spec.c0 / std::sqrt(n2),
                               std::polar(spec.c1 / std::sqrt(n2), spec.theta1),
                               std::polar(spec.c2 / std::sqrt(n2), spec.theta2)};
            cplx acc = 0.0;
            for (int m = 0; m < 3; ++m)
                for (int n = 0; n < 3; ++n)
                    acc += std::conj(c[m]) * c[n] * d_elem_small(m, n, xp_a) *
                           d_elem_small(m, n, xp_b);
            return acc * th;
        }
        case F::SqueezedCat: {
            const double g2 = abs2(spec.gamma);
            const double n2 =
                1.0 / (1.0 + std::exp(-g2) * std::sin(2.0 * spec.delta) *
                                 std::cos(spec.theta));
            const cplx sum = xp_a + xp_b;
            // <gg|D D|gg> phase, and the two <S00|..|Sgg> cross overlaps.
            const cplx self = std::polar(
                1.0, 2.0 * (sum * std::conj(spec.gamma)).imag());
            const cplx cr1 = std::exp(-g2 - spec.gamma * std::conj(sum));
            const cplx cr2 = std::exp(-g2 + std::conj(spec.gamma) * sum);
            const double cd = std::cos(spec.delta), sd = std::sin(spec.delta);
            const cplx val = cd * cd + sd * sd * self +
                             sd * cd * (std::polar(1.0, spec.theta) * cr1 +
                                        std::polar(1.0, -spec.theta) * cr2);
            return n2 * e0 * val * th;
        }
    }
    throw SpecError("unknown resource family");
}

Sym4 resource_envelope(const ResourceSpec& spec) {
    const Mat<4, 4> m = bogoliubov_pair_matrix(spec.r, spec.phi);
    Sym4 q = congruence(m, Sym4::identity(0.5));
    q(0, 0) += spec.nth_a;
    q(1, 1) += spec.nth_a;
    q(2, 2) += spec.nth_b;
    q(3, 3) += spec.nth_b;
    return q;
}

}  // namespace cvqt
