#include "cvqt/fock_rep.hpp"

#include <cmath>

namespace cvqt {

namespace {

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

/// Generalized Laguerre L_k^{(a)}(x) by the three-term recurrence.
double laguerre(int k, int a, double x) {
    if (k == 0) return 1.0;
    double lm1 = 1.0;
    double l = 1.0 + a - x;
    for (int i = 2; i <= k; ++i) {
        const double next = ((2.0 * i - 1.0 + a - x) * l - (i - 1.0 + a) * lm1) / i;
        lm1 = l;
        l = next;
    }
    return l;
}

/// lambda = -e^{i phi} tanh r, the ratio appearing in every two-mode
/// squeezing coefficient ladder.
cplx squeeze_lambda(double r, double phi) {
    return -std::polar(std::tanh(r), phi);
}

std::vector<cplx> lambda_powers(cplx lam, int n_max) {
    std::vector<cplx> lp(n_max + 1);
    lp[0] = 1.0;
    for (int n = 1; n <= n_max; ++n) lp[n] = lp[n - 1] * lam;
    return lp;
}

double tail_of(const std::vector<cplx>& v) {
    double norm2 = 0.0;
    for (const cplx& c : v) norm2 += std::norm(c);
    return std::max(0.0, 1.0 - norm2);
}

FockTensor diagonal_tensor(std::vector<cplx> b) {
    FockTensor t;
    t.n_max = static_cast<int>(b.size()) - 1;
    t.diagonal = true;
    t.amp.assign(static_cast<size_t>(t.dim()) * t.dim(), cplx{});
    for (int n = 0; n <= t.n_max; ++n) t.at(n, n) = b[n];
    t.tail_mass = tail_of(b);
    return t;
}

/// Diagonal Schmidt vector of a pure resource family (everything except the
/// squeezed cat, which is not number-diagonal).
std::vector<cplx> diagonal_amplitudes(const ResourceSpec& spec, int n_max) {
    using F = ResourceSpec::Family;
    const auto b0 = schmidt_ladder(0, spec.r, spec.phi, n_max);
    std::vector<cplx> b(n_max + 1);
    switch (spec.family) {
        case F::TMSV:
            return b0;
        case F::SqueezedFock11:
            return schmidt_ladder(1, spec.r, spec.phi, n_max);
        case F::SqueezedBell: {
            const auto b1 = schmidt_ladder(1, spec.r, spec.phi, n_max);
            const cplx e = std::polar(1.0, spec.theta);
            for (int n = 0; n <= n_max; ++n)
                b[n] = std::cos(spec.delta) * b0[n] + e * std::sin(spec.delta) * b1[n];
            return b;
        }
        case F::PhotonSubtracted: {
            const auto b1 = schmidt_ladder(1, spec.r, spec.phi, n_max);
            const double t = std::tanh(spec.r);
            const cplx e = std::polar(1.0, spec.phi);
            const double nrm = std::sqrt(1.0 + t * t);
            for (int n = 0; n <= n_max; ++n) b[n] = (-b0[n] + e * t * b1[n]) / nrm;
            return b;
        }
        case F::PhotonAdded: {
            const auto b1 = schmidt_ladder(1, spec.r, spec.phi, n_max);
            const double t = std::tanh(spec.r);
            const cplx e = std::polar(1.0, spec.phi);
            const double nrm = std::sqrt(1.0 + t * t);
            for (int n = 0; n <= n_max; ++n) b[n] = (-t * b0[n] + e * b1[n]) / nrm;
            return b;
        }
        case F::SSSF: {
            const auto b1 = schmidt_ladder(1, spec.r, spec.phi, n_max);
            const auto b2 = schmidt_ladder(2, spec.r, spec.phi, n_max);
            const double nrm =
                std::sqrt(spec.c0 * spec.c0 + spec.c1 * spec.c1 + spec.c2 * spec.c2);
            const cplx e1 = std::polar(1.0, spec.theta1);
            const cplx e2 = std::polar(1.0, spec.theta2);
            for (int n = 0; n <= n_max; ++n)
                b[n] = (spec.c0 * b0[n] + spec.c1 * e1 * b1[n] +
                        spec.c2 * e2 * b2[n]) / nrm;
            return b;
        }
        default:
            throw SpecError("family is not number-diagonal");
    }
}

FockTensor cat_tensor(const ResourceSpec& spec, int n_max) {
    const int dim = n_max + 1;
    const auto b0 = schmidt_ladder(0, spec.r, spec.phi, n_max);
    const double g2 = std::norm(spec.gamma);
    const double nrm = 1.0 / std::sqrt(1.0 + std::exp(-g2) *
                                                 std::sin(2.0 * spec.delta) *
                                                 std::cos(spec.theta));
    // S |gamma,gamma> = D_A(gamma') D_B(gamma') S |00> with the displacement
    // amplitude transformed by the same Bogoliubov coefficients.
    const cplx gp = std::cosh(spec.r) * spec.gamma -
                    std::polar(1.0, spec.phi) * std::sinh(spec.r) *
                        std::conj(spec.gamma);
    std::vector<cplx> d(static_cast<size_t>(dim) * dim);
    for (int m = 0; m < dim; ++m)
        for (int n = 0; n < dim; ++n)
            d[static_cast<size_t>(m) * dim + n] = displacement_element(m, n, gp);

    FockTensor t;
    t.n_max = n_max;
    t.diagonal = false;
    t.amp.assign(static_cast<size_t>(dim) * dim, cplx{});
    // psi = nrm (cos d diag(b0) + e^{i th} sin d  D diag(b0) D^T).
    const cplx cw = nrm * std::cos(spec.delta);
    const cplx sw = nrm * std::polar(std::sin(spec.delta), spec.theta);
    for (int m = 0; m < dim; ++m)
        for (int n = 0; n < dim; ++n) {
            cplx acc = 0.0;
            for (int k = 0; k < dim; ++k)
                acc += d[static_cast<size_t>(m) * dim + k] * b0[k] *
                       d[static_cast<size_t>(n) * dim + k];
            t.at(m, n) = sw * acc;
        }
    for (int n = 0; n < dim; ++n) t.at(n, n) += cw * b0[n];
    double norm2 = 0.0;
    for (const cplx& c : t.amp) norm2 += std::norm(c);
    t.tail_mass = std::max(0.0, 1.0 - norm2);
    return t;
}

int next_size(int n) { return n >= 100 ? kMaxNmax : 2 * n; }

}  // namespace

cplx displacement_element(int m, int n, cplx xi) {
    const double x = std::norm(xi);
    if (m < n) {
        // <m|D(xi)|n> = conj(<n|D(-xi)|m>).
        return std::conj(displacement_element(n, m, -xi));
    }
    const double logpre = 0.5 * (log_factorial(n) - log_factorial(m));
    cplx pw = 1.0;
    for (int i = 0; i < m - n; ++i) pw *= xi;
    return std::exp(logpre - x / 2.0) * pw * laguerre(n, m - n, x);
}

std::vector<cplx> schmidt_ladder(int level, double r, double phi, int n_max) {
    const cplx lam = squeeze_lambda(r, phi);
    const cplx cl = std::conj(lam);
    const auto lp = lambda_powers(lam, n_max);
    const double sech = 1.0 / std::cosh(r);
    const double s3 = sech * sech * sech;
    const double s5 = s3 * sech * sech;
    std::vector<cplx> b(n_max + 1);
    switch (level) {
        case 0:
            for (int n = 0; n <= n_max; ++n) b[n] = sech * lp[n];
            break;
        case 1:
            for (int n = 0; n <= n_max; ++n) {
                cplx v = -cl * sech * lp[n];
                if (n >= 1) v += s3 * static_cast<double>(n) * lp[n - 1];
                b[n] = v;
            }
            break;
        case 2:
            for (int n = 0; n <= n_max; ++n) {
                cplx v = sech * cl * cl * lp[n];
                if (n >= 1) v += -2.0 * static_cast<double>(n) * s3 * cl * lp[n - 1];
                if (n >= 2)
                    v += s5 * (static_cast<double>(n) * (n - 1.0) / 2.0) * lp[n - 2];
                b[n] = v;
            }
            break;
        default:
            throw SpecError("schmidt_ladder level must be 0, 1 or 2");
    }
    return b;
}

FockTensor synthesize_resource_fock(const ResourceSpec& spec, int n_max) {
    validate(spec);
    if (!spec.pure())
        throw SpecError("Fock synthesis is defined for pure resources only");
    const bool automatic = n_max < 0;
    int n = automatic ? kDefaultNmax : n_max;
    if (n < 2) throw SpecError("n_max must be at least 2");
    for (;;) {
        FockTensor t = (spec.family == ResourceSpec::Family::SqueezedCat)
                           ? cat_tensor(spec, n)
                           : diagonal_tensor(diagonal_amplitudes(spec, n));
        if (t.tail_mass <= kTailTol) return t;
        if (!automatic || n >= kMaxNmax)
            throw NumericError("Fock truncation too heavy: tail " +
                               std::to_string(t.tail_mass) + " at n_max " +
                               std::to_string(n));
        n = next_size(n);
    }
}

std::vector<cplx> synthesize_input_fock(const InputStateSpec& spec, int n_max) {
    validate(spec);
    using K = InputStateSpec::Kind;
    if (spec.kind == K::Mixture)
        throw SpecError("Fock synthesis is defined for pure inputs only");
    const bool automatic = n_max < 0;
    int n = automatic ? kDefaultNmax : n_max;
    if (n < 2) throw SpecError("n_max must be at least 2");
    for (;;) {
        std::vector<cplx> c(n + 1);
        switch (spec.kind) {
            case K::Coherent: {
                // c_k = e^{-|beta|^2/2} beta^k / sqrt(k!).
                const double b2 = std::norm(spec.beta);
                cplx pw = 1.0;
                for (int k = 0; k <= n; ++k) {
                    c[k] = std::exp(-b2 / 2.0 - 0.5 * log_factorial(k)) * pw;
                    pw *= spec.beta;
                }
                break;
            }
            case K::Fock1:
                c[1] = 1.0;
                break;
            case K::SqueezedVacuum: {
                const cplx lam = -std::polar(std::tanh(spec.s), spec.phi_s);
                cplx lpk = 1.0;
                for (int k = 0; 2 * k <= n; ++k) {
                    const double w = std::exp(0.5 * log_factorial(2 * k) -
                                              k * std::log(2.0) - log_factorial(k));
                    c[2 * k] = std::pow(std::cosh(spec.s), -0.5) * lpk * w;
                    lpk *= lam;
                }
                break;
            }
            case K::SqueezedFock1: {
                const cplx lam = -std::polar(std::tanh(spec.s), spec.phi_s);
                cplx lpk = 1.0;
                for (int k = 0; 2 * k + 1 <= n; ++k) {
                    const double w = std::exp(0.5 * log_factorial(2 * k + 1) -
                                              k * std::log(2.0) - log_factorial(k));
                    c[2 * k + 1] = std::pow(std::cosh(spec.s), -1.5) * lpk * w;
                    lpk *= lam;
                }
                break;
            }
            case K::PhotonAddedCoherent: {
                const double b2 = std::norm(spec.beta);
                cplx pw = 1.0;
                for (int k = 0; k + 1 <= n; ++k) {
                    const cplx coh =
                        std::exp(-b2 / 2.0 - 0.5 * log_factorial(k)) * pw;
                    c[k + 1] = coh * std::sqrt(k + 1.0) / std::sqrt(1.0 + b2);
                    pw *= spec.beta;
                }
                break;
            }
            case K::Mixture:
                break;  // unreachable
        }
        const double tail = tail_of(c);
        if (tail <= kTailTol) return c;
        if (!automatic || n >= kMaxNmax)
            throw NumericError("Fock truncation too heavy: tail " +
                               std::to_string(tail) + " at n_max " +
                               std::to_string(n));
        n = next_size(n);
    }
}

cplx chi_from_fock(const FockTensor& t, cplx xi_a, cplx xi_b) {
    const int dim = t.dim();
    if (t.diagonal) {
        cplx acc = 0.0;
        for (int m = 0; m < dim; ++m) {
            const cplx bm = std::conj(t.at(m, m));
            if (bm == cplx{}) continue;
            for (int n = 0; n < dim; ++n)
                acc += bm * t.at(n, n) * displacement_element(m, n, xi_a) *
                       displacement_element(m, n, xi_b);
        }
        return acc;
    }
    std::vector<cplx> da(static_cast<size_t>(dim) * dim);
    std::vector<cplx> db(static_cast<size_t>(dim) * dim);
    for (int m = 0; m < dim; ++m)
        for (int n = 0; n < dim; ++n) {
            da[static_cast<size_t>(m) * dim + n] = displacement_element(m, n, xi_a);
            db[static_cast<size_t>(m) * dim + n] = displacement_element(m, n, xi_b);
        }
    // chi = sum_{b,d} (psi^dag D_A psi)_{b d} (D_B)_{b d}.
    cplx acc = 0.0;
    std::vector<cplx> col(dim);
    for (int b = 0; b < dim; ++b) {
        for (int d = 0; d < dim; ++d) {
            cplx inner = 0.0;
            for (int a = 0; a < dim; ++a) {
                cplx row = 0.0;
                for (int c = 0; c < dim; ++c)
                    row += da[static_cast<size_t>(a) * dim + c] * t.at(c, d);
                inner += std::conj(t.at(a, b)) * row;
            }
            acc += inner * db[static_cast<size_t>(b) * dim + d];
        }
    }
    return acc;
}

cplx chi_from_fock(const std::vector<cplx>& psi, cplx xi) {
    const int dim = static_cast<int>(psi.size());
    cplx acc = 0.0;
    for (int m = 0; m < dim; ++m) {
        if (psi[m] == cplx{}) continue;
        const cplx pm = std::conj(psi[m]);
        for (int n = 0; n < dim; ++n) {
            if (psi[n] == cplx{}) continue;
            acc += pm * psi[n] * displacement_element(m, n, xi);
        }
    }
    return acc;
}

std::vector<cplx> reduced_density(const FockTensor& t) {
    const int dim = t.dim();
    std::vector<cplx> rho(static_cast<size_t>(dim) * dim);
    for (int m = 0; m < dim; ++m)
        for (int n = 0; n < dim; ++n) {
            cplx acc = 0.0;
            for (int k = 0; k < dim; ++k)
                acc += t.at(m, k) * std::conj(t.at(n, k));
            rho[static_cast<size_t>(m) * dim + n] = acc;
        }
    return rho;
}

SchmidtMoments schmidt_moments(const std::vector<cplx>& b) {
    SchmidtMoments m{0.0, cplx{}};
    for (size_t n = 0; n < b.size(); ++n) {
        m.n_mean += static_cast<double>(n) * std::norm(b[n]);
        if (n >= 1)
            m.pair += std::conj(b[n - 1]) * b[n] * static_cast<double>(n);
    }
    return m;
}

}  // namespace cvqt
