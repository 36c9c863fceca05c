#include "cvqt/measures.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "cvqt/fock_rep.hpp"
#include "cvqt/numeric.hpp"

namespace cvqt {

namespace {

// ---------------------------------------------------------------------------
// Finite-difference derivatives of chi at the origin.
//
// Each raw stencil is evaluated at steps h, h/2, h/4, h/8 and Richardson-
// extrapolated; the two second-level extrapolants must agree to 1e-9,
// which is the convergence contract for the differentiation.  Two guarded
// levels keep both error sources far from the contract: truncation in the
// compared pair is O(h^6) and roundoff at the smallest step is ~eps/h^2,
// both < 1e-10 for the default h.
// ---------------------------------------------------------------------------

cplx chi_at(const ResourceSpec& spec, const double v[4]) {
    return chi_resource(spec, cplx(v[0], v[1]), cplx(v[2], v[3]));
}

cplx richardson(const std::function<cplx(double)>& raw, double h,
                const char* what) {
    const cplx dh = raw(h);
    const cplx dh2 = raw(h / 2.0);
    const cplx dh4 = raw(h / 4.0);
    const cplx dh8 = raw(h / 8.0);
    const cplx r1a = (4.0 * dh2 - dh) / 3.0;
    const cplx r1b = (4.0 * dh4 - dh2) / 3.0;
    const cplx r1c = (4.0 * dh8 - dh4) / 3.0;
    const cplx r2a = (16.0 * r1b - r1a) / 15.0;
    const cplx r2b = (16.0 * r1c - r1b) / 15.0;
    if (std::abs(r2a - r2b) > 1e-9 * std::max(1.0, std::abs(r2b))) {
        throw NumericError(std::string("finite-difference derivative (") +
                           what + ") did not converge under step halving");
    }
    return (64.0 * r2b - r2a) / 63.0;
}

/// First derivative of chi along axis i of (w_A, z_A, w_B, z_B).
cplx chi_d1(const ResourceSpec& spec, int i, double h) {
    auto raw = [&](double step) {
        double vp[4] = {0, 0, 0, 0};
        double vm[4] = {0, 0, 0, 0};
        vp[i] = step;
        vm[i] = -step;
        return (chi_at(spec, vp) - chi_at(spec, vm)) / (2.0 * step);
    };
    return richardson(raw, h, "gradient");
}

/// Second derivative along axes i, j (pure when i == j, mixed otherwise).
cplx chi_d2(const ResourceSpec& spec, int i, int j, double h) {
    if (i == j) {
        const cplx f0 = chi_resource(spec, 0.0, 0.0);
        auto raw = [&](double step) {
            double vp[4] = {0, 0, 0, 0};
            double vm[4] = {0, 0, 0, 0};
            vp[i] = step;
            vm[i] = -step;
            return (chi_at(spec, vp) - 2.0 * f0 + chi_at(spec, vm)) /
                   (step * step);
        };
        return richardson(raw, h, "hessian diagonal");
    }
    auto raw = [&](double step) {
        double vpp[4] = {0, 0, 0, 0};
        double vpm[4] = {0, 0, 0, 0};
        double vmp[4] = {0, 0, 0, 0};
        double vmm[4] = {0, 0, 0, 0};
        vpp[i] = step;
        vpp[j] = step;
        vpm[i] = step;
        vpm[j] = -step;
        vmp[i] = -step;
        vmp[j] = step;
        vmm[i] = -step;
        vmm[j] = -step;
        return (chi_at(spec, vpp) - chi_at(spec, vpm) - chi_at(spec, vmp) +
                chi_at(spec, vmm)) /
               (4.0 * step * step);
    };
    return richardson(raw, h, "hessian off-diagonal");
}

double expect_real(cplx v, const char* what) {
    if (std::abs(v.imag()) > 1e-7) {
        throw NumericError(std::string(what) +
                           " has a non-negligible imaginary part");
    }
    return v.real();
}

double occupation_guard(double n, const char* what) {
    if (n < -1e-9) {
        throw NumericError(std::string(what) + " is negative beyond tolerance");
    }
    return std::max(n, 0.0);
}

}  // namespace

// ---------------------------------------------------------------------------
// Moments.
// ---------------------------------------------------------------------------

SecondMoments second_moments(const ResourceSpec& resource, double h) {
    validate(resource);
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw SpecError("finite-difference step must be positive");
    }
    SecondMoments out;
    const cplx dww_a = chi_d2(resource, 0, 0, h);
    const cplx dzz_a = chi_d2(resource, 1, 1, h);
    const cplx dww_b = chi_d2(resource, 2, 2, h);
    const cplx dzz_b = chi_d2(resource, 3, 3, h);
    // Symmetric-ordered <a^dag a> from the radial Laplacian, shifted to
    // operator ordering by the commutator half-quantum.
    out.n_a = occupation_guard(
        expect_real(-0.25 * (dww_a + dzz_a), "n_A") - 0.5, "n_A");
    out.n_b = occupation_guard(
        expect_real(-0.25 * (dww_b + dzz_b), "n_B") - 0.5, "n_B");
    const cplx dwawb = chi_d2(resource, 0, 2, h);
    const cplx dzazb = chi_d2(resource, 1, 3, h);
    const cplx dwazb = chi_d2(resource, 0, 3, h);
    const cplx dzawb = chi_d2(resource, 1, 2, h);
    out.cross = 0.25 * (dwawb - dzazb + cplx(0.0, 1.0) * (dwazb + dzawb));
    const cplx dwa = chi_d1(resource, 0, h);
    const cplx dza = chi_d1(resource, 1, h);
    const cplx dwb = chi_d1(resource, 2, h);
    const cplx dzb = chi_d1(resource, 3, h);
    out.first_a = 0.5 * (-dwa - cplx(0.0, 1.0) * dza);
    out.first_b = 0.5 * (-dwb - cplx(0.0, 1.0) * dzb);
    return out;
}

SecondMoments second_moments_fock(const ResourceSpec& resource) {
    const FockTensor t = synthesize_resource_fock(resource);
    const int d = t.dim();
    SecondMoments out;
    double na = 0.0;
    double nb = 0.0;
    cplx cross = 0.0;
    cplx fa = 0.0;
    cplx fb = 0.0;
    for (int m = 0; m < d; ++m) {
        for (int n = 0; n < d; ++n) {
            const cplx amp = t.at(m, n);
            const double p = std::norm(amp);
            na += m * p;
            nb += n * p;
            if (m >= 1 && n >= 1) {
                cross += std::conj(t.at(m - 1, n - 1)) * amp *
                         std::sqrt(static_cast<double>(m) * n);
            }
            if (m >= 1) fa += std::conj(t.at(m - 1, n)) * amp * std::sqrt(m);
            if (n >= 1) fb += std::conj(t.at(m, n - 1)) * amp * std::sqrt(n);
        }
    }
    out.n_a = na;
    out.n_b = nb;
    out.cross = cross;
    out.first_a = fa;
    out.first_b = fb;
    return out;
}

double inseparability_delta(const ResourceSpec& resource) {
    const SecondMoments m = second_moments(resource);
    return m.n_a * m.n_b - std::norm(m.cross);
}

// ---------------------------------------------------------------------------
// Entanglement entropy.
// ---------------------------------------------------------------------------

double von_neumann_entropy(const ResourceSpec& resource) {
    if (resource.nth_a != 0.0 || resource.nth_b != 0.0) {
        throw SpecError("entanglement entropy requires a pure resource");
    }
    const FockTensor t = synthesize_resource_fock(resource);
    std::vector<double> eigs;
    if (t.diagonal) {
        eigs.reserve(t.dim());
        for (int n = 0; n < t.dim(); ++n) eigs.push_back(std::norm(t.at(n, n)));
    } else {
        std::vector<cplx> rho = reduced_density(t);
        eigs = hermitian_eigenvalues(rho, t.dim());
    }
    double e = 0.0;
    for (double lam : eigs) {
        if (lam > 1e-15) e -= lam * std::log2(lam);
    }
    return std::max(e, 0.0);
}

// ---------------------------------------------------------------------------
// Non-Gaussianity.
// ---------------------------------------------------------------------------

namespace {

struct GaussianFit {
    Sym4 sigma;          // covariance of (x_A, p_A, x_B, p_B)
    double mean[4] = {0, 0, 0, 0};
};

// Quadrature-phase moments from chi derivatives: with xi = w + i z the
// evaluator is E[exp(i u . R)] for u = (2 z_A, -2 w_A, 2 z_B, -2 w_B) and
// R = (x_A, p_A, x_B, p_B); x-components differentiate along z with sign +,
// p-components along w with sign -.
GaussianFit fit_gaussian(const ResourceSpec& spec, double h) {
    static constexpr int axis[4] = {1, 0, 3, 2};   // z_A, w_A, z_B, w_B
    static constexpr double sgn[4] = {1.0, -1.0, 1.0, -1.0};
    GaussianFit fit;
    cplx grad[4];
    for (int j = 0; j < 4; ++j) grad[j] = chi_d1(spec, axis[j], h);
    for (int j = 0; j < 4; ++j) {
        fit.mean[j] =
            expect_real(cplx(0.0, -0.5) * sgn[j] * grad[j], "first moment");
    }
    for (int j = 0; j < 4; ++j) {
        for (int k = j; k < 4; ++k) {
            const cplx d2 = chi_d2(spec, axis[j], axis[k], h);
            const double sym =
                expect_real(-0.25 * sgn[j] * sgn[k] * d2, "second moment");
            const double cov = sym - fit.mean[j] * fit.mean[k];
            fit.sigma(j, k) = cov;
            fit.sigma(k, j) = cov;
        }
    }
    return fit;
}

Mat<4, 4> phase_pairing() {
    // Rows are u/2 in terms of v = (w_A, z_A, w_B, z_B).
    Mat<4, 4> p;
    p(0, 1) = 1.0;
    p(1, 0) = -1.0;
    p(2, 3) = 1.0;
    p(3, 2) = -1.0;
    return p;
}

Chi2 gaussian_chi(const GaussianFit& fit) {
    Chi2 out;
    const Mat<4, 4> p = phase_pairing();
    Sym4 quad = congruence(p, fit.sigma);
    Sym4 env;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) env(i, j) = 2.0 * quad(i, j);
    const double mx_a = fit.mean[0];
    const double mp_a = fit.mean[1];
    const double mx_b = fit.mean[2];
    const double mp_b = fit.mean[3];
    out.env = env;
    // The Gaussian core e^{-v^T env v} with env = 2 P^T sigma P is exactly
    // exp(-u^T sigma u / 2) at u = 2 P v; vacuum reduces to e^{-|xi|^2/2}.
    out.chi = [env, mx_a, mp_a, mx_b, mp_b](cplx xa, cplx xb) {
        const double v[4] = {xa.real(), xa.imag(), xb.real(), xb.imag()};
        double q = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) q += v[i] * env(i, j) * v[j];
        const double phase = 2.0 * (xa.imag() * mx_a - xa.real() * mp_a +
                                    xb.imag() * mx_b - xb.real() * mp_b);
        return std::exp(cplx(-q, phase));
    };
    return out;
}

}  // namespace

Chi2 gaussian_reference(const ResourceSpec& resource, double h) {
    validate(resource);
    return gaussian_chi(fit_gaussian(resource, h));
}

double gaussian_reference_purity(const ResourceSpec& resource, double h) {
    validate(resource);
    const GaussianFit fit = fit_gaussian(resource, h);
    const double det = sym4_det(fit.sigma);
    if (!(det > 0.0)) {
        throw NumericError("fitted covariance matrix is not positive definite");
    }
    return (1.0 / 16.0) / std::sqrt(det);
}

double non_gaussianity(const ResourceSpec& resource,
                       const QuadratureConfig& cfg) {
    validate(resource);
    if (resource.nth_a != 0.0 || resource.nth_b != 0.0) {
        throw SpecError("non-Gaussianity measure requires a pure resource");
    }
    const Chi2 rho = make_chi(resource);
    const Chi2 rho_g = gaussian_reference(resource);
    const double p = purity(rho, cfg);
    const double pg = purity(rho_g, cfg);
    const double ov = state_overlap(rho, rho_g, cfg);
    const double d = (p + pg - 2.0 * ov) / (2.0 * p);
    if (d < -1e-7 || d >= 1.0) {
        throw NumericError("non-Gaussianity fell outside [0, 1)");
    }
    return std::max(d, 0.0);
}

// ---------------------------------------------------------------------------
// Squeezed-vacuum affinity.
// ---------------------------------------------------------------------------

AffinityResult vacuum_affinity(const ResourceSpec& resource, double s_max) {
    validate(resource);
    if (!(s_max > 0.0) || !std::isfinite(s_max)) {
        throw SpecError("affinity search bound must be positive");
    }
    const FockTensor t = synthesize_resource_fock(resource);
    std::vector<cplx> diag(t.dim());
    for (int n = 0; n < t.dim(); ++n) diag[n] = t.at(n, n);
    auto g_of = [&diag](double s) {
        const double th = std::tanh(s);
        double w = 1.0 / std::cosh(s);
        cplx acc = 0.0;
        for (const cplx& d : diag) {
            acc += w * d;
            w *= th;
        }
        return std::norm(acc);
    };
    auto [s_star, g_star] = golden_max(g_of, 0.0, s_max, 1e-8);
    AffinityResult out;
    out.s_star = s_star;
    out.g = g_star;
    // Endpoint guard: golden section assumes unimodality.
    const double g_hi = g_of(s_max);
    if (g_hi > out.g) {
        out.g = g_hi;
        out.s_star = s_max;
    }
    const double g_lo = g_of(0.0);
    if (g_lo > out.g) {
        out.g = g_lo;
        out.s_star = 0.0;
    }
    out.at_boundary = out.s_star >= s_max - 1e-6;
    return out;
}

double relative_fidelity(double f_opt, double f_ref) {
    require_finite(f_opt, "F_opt");
    require_finite(f_ref, "F_ref");
    if (!(f_ref > 0.0)) {
        throw SpecError("reference fidelity must be positive");
    }
    return (f_opt - f_ref) / f_ref;
}

}  // namespace cvqt
