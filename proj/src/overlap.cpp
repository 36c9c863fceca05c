#include "cvqt/overlap.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace cvqt {

namespace {

// ---------------------------------------------------------------------------
// Gauss-Hermite rules (weight e^{-x^2} on R), computed once per order.
// ---------------------------------------------------------------------------

struct GhRule {
    std::vector<double> x;       // nodes, ascending
    std::vector<double> wlift;   // weights premultiplied by e^{x^2}
};

// Evaluate the orthonormal Hermite functions h_n(x) (orthonormal w.r.t.
// e^{-x^2} dx) via the stable two-term recurrence; returns h_n and h_{n-1}.
void hermite_pair(int n, double x, double& hn, double& hnm1) {
    double p1 = 1.0 / std::pow(kPi, 0.25);
    double p2 = 0.0;
    for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = x * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
    }
    hn = p1;
    hnm1 = p2;
}

GhRule compute_gh_rule(int n) {
    GhRule rule;
    rule.x.assign(n, 0.0);
    rule.wlift.assign(n, 0.0);
    const int half = (n + 1) / 2;
    std::vector<double> roots(half, 0.0);  // descending positive roots
    double z = 0.0;
    for (int i = 0; i < half; ++i) {
        // Stride guesses, then polish by Newton on the orthonormal recurrence.
        if (i == 0) {
            z = std::sqrt(2.0 * n + 1.0) -
                1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
        } else if (i == 1) {
            z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
        } else if (i == 2) {
            z = 1.86 * z - 0.86 * roots[0];
        } else if (i == 3) {
            z = 1.91 * z - 0.91 * roots[1];
        } else {
            z = 2.0 * z - roots[i - 2];
        }
        double hn = 0.0;
        double hnm1 = 0.0;
        for (int it = 0; it < 64; ++it) {
            hermite_pair(n, z, hn, hnm1);
            const double dz = hn / (std::sqrt(2.0 * n) * hnm1);
            z -= dz;
            if (std::abs(dz) <= 1e-15 * (1.0 + std::abs(z))) break;
        }
        hermite_pair(n, z, hn, hnm1);
        roots[i] = z;
        const double w = 1.0 / (n * hnm1 * hnm1);
        const double wl = w * std::exp(z * z);
        rule.x[n - 1 - i] = z;
        rule.x[i] = -z;
        rule.wlift[n - 1 - i] = wl;
        rule.wlift[i] = wl;
    }
    if (n % 2 == 1) {
        rule.x[n / 2] = 0.0;
        double hn = 0.0;
        double hnm1 = 0.0;
        hermite_pair(n, 0.0, hn, hnm1);
        rule.wlift[n / 2] = 1.0 / (n * hnm1 * hnm1);
    }
    return rule;
}

const GhRule& gh_rule(int n) {
    static std::mutex mtx;
    static std::map<int, GhRule> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gh_rule(n)).first;
    return it->second;
}

// Safety margin: axis scale 1/(kMargin sqrt(lambda)) widens the node cloud
// beyond the pure-Gaussian optimum to capture polynomial prefactors.
constexpr double kMargin = 0.8;
constexpr double kMinEig = 1e-12;

cplx raw_integrate2(const std::function<cplx(double, double)>& f,
                    const Sym2& q, int order) {
    std::array<double, 2> vals;
    std::array<std::array<double, 2>, 2> vecs;
    jacobi_eigh<2>(q, vals, vecs);
    if (vals[0] < kMinEig || vals[1] < kMinEig) {
        throw NumericError(
            "quadrature envelope is degenerate (non-decaying direction); "
            "pass an explicit envelope_scale");
    }
    const double s0 = 1.0 / (kMargin * std::sqrt(vals[0]));
    const double s1 = 1.0 / (kMargin * std::sqrt(vals[1]));
    const GhRule& rule = gh_rule(order);
    std::vector<cplx> buf;
    buf.resize(static_cast<std::size_t>(order) * order);
    std::size_t k = 0;
    for (int i = 0; i < order; ++i) {
        const double y0 = s0 * rule.x[i];
        const double wi = rule.wlift[i];
        for (int j = 0; j < order; ++j) {
            const double y1 = s1 * rule.x[j];
            const double w = vecs[0][0] * y0 + vecs[0][1] * y1;
            const double z = vecs[1][0] * y0 + vecs[1][1] * y1;
            buf[k++] = (wi * rule.wlift[j]) * f(w, z);
        }
    }
    return pairwise_sum(buf.data(), buf.size()) * (s0 * s1);
}

cplx raw_integrate4(
    const std::function<cplx(double, double, double, double)>& f,
    const Sym4& q, int order) {
    std::array<double, 4> vals;
    std::array<std::array<double, 4>, 4> vecs;
    jacobi_eigh<4>(q, vals, vecs);
    double s[4];
    for (int a = 0; a < 4; ++a) {
        if (vals[a] < kMinEig) {
            throw NumericError(
                "quadrature envelope is degenerate (non-decaying direction); "
                "pass an explicit envelope_scale");
        }
        s[a] = 1.0 / (kMargin * std::sqrt(vals[a]));
    }
    const GhRule& rule = gh_rule(order);
    std::vector<cplx> outer(order);
    std::vector<cplx> inner;
    inner.resize(static_cast<std::size_t>(order) * order * order);
    for (int i0 = 0; i0 < order; ++i0) {
        const double y0 = s[0] * rule.x[i0];
        std::size_t k = 0;
        for (int i1 = 0; i1 < order; ++i1) {
            const double y1 = s[1] * rule.x[i1];
            const double w01 = rule.wlift[i1];
            for (int i2 = 0; i2 < order; ++i2) {
                const double y2 = s[2] * rule.x[i2];
                const double w012 = w01 * rule.wlift[i2];
                for (int i3 = 0; i3 < order; ++i3) {
                    const double y3 = s[3] * rule.x[i3];
                    double v[4];
                    for (int a = 0; a < 4; ++a) {
                        v[a] = vecs[a][0] * y0 + vecs[a][1] * y1 +
                               vecs[a][2] * y2 + vecs[a][3] * y3;
                    }
                    inner[k++] =
                        (w012 * rule.wlift[i3]) * f(v[0], v[1], v[2], v[3]);
                }
            }
        }
        outer[i0] = rule.wlift[i0] * pairwise_sum(inner.data(), k);
    }
    return pairwise_sum(outer.data(), outer.size()) * (s[0] * s[1] * s[2] * s[3]);
}

void check_order(int order) {
    if (order < 8) throw SpecError("quadrature order must be at least 8");
    if (order > 1024) throw SpecError("quadrature order is unreasonably large");
}

double env_override(const QuadratureConfig& cfg) {
    if (cfg.envelope_scale < 0.0 ||
        !std::isfinite(cfg.envelope_scale)) {
        throw SpecError("envelope_scale must be a finite value >= 0");
    }
    return cfg.envelope_scale;
}

// ---------------------------------------------------------------------------
// Result hygiene shared by the public entry points.
// ---------------------------------------------------------------------------

double real_probability(cplx value, const char* what) {
    if (std::abs(value.imag()) > 1e-7) {
        throw NumericError(std::string(what) +
                           " has a non-negligible imaginary part");
    }
    double r = value.real();
    if (r < -1e-9 || r > 1.0 + 1e-9) {
        throw NumericError(std::string(what) + " lies outside [0, 1]");
    }
    return std::clamp(r, 0.0, 1.0);
}

}  // namespace

// ---------------------------------------------------------------------------
// Configuration defaults (CFT_QUAD_ORDER overrides the base order).
// ---------------------------------------------------------------------------

QuadratureConfig::QuadratureConfig()
    : order(48), order4(24), envelope_scale(0.0), convergence(1e-9) {
    if (const char* env = std::getenv("CFT_QUAD_ORDER")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 8 && v <= 256) {
            order = static_cast<int>(v);
            order4 = static_cast<int>(std::clamp(v / 2, 8L, 64L));
        }
    }
}

// ---------------------------------------------------------------------------
// Convergence-checked integration.
// ---------------------------------------------------------------------------

cplx integrate_r2(const std::function<cplx(double, double)>& f, const Sym2& q,
                  const QuadratureConfig& cfg) {
    check_order(cfg.order);
    Sym2 qq = q;
    if (const double a = env_override(cfg); a > 0.0) qq = Sym2::identity(a);
    if (cfg.convergence <= 0.0) return raw_integrate2(f, qq, cfg.order);
    const cplx v1 = raw_integrate2(f, qq, cfg.order);
    const cplx v2 = raw_integrate2(f, qq, 2 * cfg.order);
    if (std::abs(v1 - v2) <= cfg.convergence * std::max(1.0, std::abs(v2))) {
        return v2;
    }
    const cplx v3 = raw_integrate2(f, qq, 4 * cfg.order);
    if (std::abs(v2 - v3) <= cfg.convergence * std::max(1.0, std::abs(v3))) {
        return v3;
    }
    throw NumericError(
        "2-D quadrature failed to converge under order doubling "
        "(drift " +
        std::to_string(std::abs(v2 - v3)) + " at order " +
        std::to_string(4 * cfg.order) + ")");
}

cplx integrate_r4(const std::function<cplx(double, double, double, double)>& f,
                  const Sym4& q, const QuadratureConfig& cfg) {
    check_order(cfg.order4);
    Sym4 qq = q;
    if (const double a = env_override(cfg); a > 0.0) qq = Sym4::identity(a);
    if (cfg.convergence <= 0.0) return raw_integrate4(f, qq, cfg.order4);
    const cplx v1 = raw_integrate4(f, qq, cfg.order4);
    const cplx v2 = raw_integrate4(f, qq, 2 * cfg.order4);
    if (std::abs(v1 - v2) <= cfg.convergence * std::max(1.0, std::abs(v2))) {
        return v2;
    }
    const cplx v3 = raw_integrate4(f, qq, 4 * cfg.order4);
    if (std::abs(v2 - v3) <= cfg.convergence * std::max(1.0, std::abs(v3))) {
        return v3;
    }
    throw NumericError(
        "4-D quadrature failed to converge under order doubling "
        "(drift " +
        std::to_string(std::abs(v2 - v3)) + " at order " +
        std::to_string(4 * cfg.order4) + ")");
}

// ---------------------------------------------------------------------------
// Evaluator adapters.
// ---------------------------------------------------------------------------

Chi1 make_chi(const InputStateSpec& spec) {
    validate(spec);
    Chi1 out;
    out.chi = [spec](cplx xi) { return chi_input(spec, xi); };
    out.env = input_envelope(spec);
    return out;
}

Chi2 make_chi(const ResourceSpec& spec) {
    validate(spec);
    Chi2 out;
    out.chi = [spec](cplx xa, cplx xb) { return chi_resource(spec, xa, xb); };
    out.env = resource_envelope(spec);
    return out;
}

// ---------------------------------------------------------------------------
// Fidelity.
// ---------------------------------------------------------------------------

double fidelity(const ChannelSpec& channel, const InputStateSpec& input,
                const ResourceSpec& resource, const QuadratureConfig& cfg) {
    validate(channel);
    validate(input);
    validate(resource);
    Sym2 q = input_envelope(input);
    q += output_envelope(channel, input, resource);
    auto f = [&](double w, double z) {
        const cplx xi(w, z);
        return chi_input(input, xi) * output_chi(channel, input, resource, -xi);
    };
    const cplx val = integrate_r2(f, q, cfg) / kPi;
    return real_probability(val, "fidelity");
}

double fidelity_mixture_bilinear(const ChannelSpec& channel,
                                 const InputStateSpec& input,
                                 const ResourceSpec& resource,
                                 const QuadratureConfig& cfg) {
    validate(channel);
    validate(input);
    validate(resource);
    if (input.kind != InputStateSpec::Kind::Mixture) {
        return fidelity(channel, input, resource, cfg);
    }
    cplx total = 0.0;
    for (const auto& [wi, part_i] : input.components) {
        for (const auto& [wj, part_j] : input.components) {
            Sym2 q = input_envelope(part_i);
            q += output_envelope(channel, part_j, resource);
            auto f = [&](double w, double z) {
                const cplx xi(w, z);
                return chi_input(part_i, xi) *
                       output_chi(channel, part_j, resource, -xi);
            };
            total += wi * wj * integrate_r2(f, q, cfg);
        }
    }
    return real_probability(total / kPi, "fidelity");
}

double fidelity_resource_mixture(
    const ChannelSpec& channel, const InputStateSpec& input,
    const std::vector<std::pair<double, ResourceSpec>>& parts,
    const QuadratureConfig& cfg) {
    if (parts.empty()) throw SpecError("resource mixture has no components");
    double wsum = 0.0;
    for (const auto& [w, spec] : parts) {
        if (w < 0.0 || !std::isfinite(w)) {
            throw SpecError("resource mixture weights must be >= 0");
        }
        wsum += w;
    }
    if (std::abs(wsum - 1.0) > 1e-12) {
        throw SpecError("resource mixture weights must sum to 1");
    }
    double total = 0.0;
    for (const auto& [w, spec] : parts) {
        total += w * fidelity(channel, input, spec, cfg);
    }
    return std::clamp(total, 0.0, 1.0);
}

// ---------------------------------------------------------------------------
// Purity and overlaps.
// ---------------------------------------------------------------------------

double purity(const Chi1& chi, const QuadratureConfig& cfg) {
    Sym2 q = chi.env;
    q += chi.env;
    auto f = [&](double w, double z) {
        const cplx v = chi.chi(cplx(w, z));
        return cplx(std::norm(v), 0.0);
    };
    const cplx val = integrate_r2(f, q, cfg) / kPi;
    return real_probability(val, "purity");
}

double purity(const Chi2& chi, const QuadratureConfig& cfg) {
    Sym4 q = chi.env;
    q += chi.env;
    auto f = [&](double wa, double za, double wb, double zb) {
        const cplx v = chi.chi(cplx(wa, za), cplx(wb, zb));
        return cplx(std::norm(v), 0.0);
    };
    const cplx val = integrate_r4(f, q, cfg) / (kPi * kPi);
    return real_probability(val, "purity");
}

double purity(const InputStateSpec& spec, const QuadratureConfig& cfg) {
    return purity(make_chi(spec), cfg);
}

double purity(const ResourceSpec& spec, const QuadratureConfig& cfg) {
    return purity(make_chi(spec), cfg);
}

double state_overlap(const Chi1& a, const Chi1& b, const QuadratureConfig& cfg) {
    Sym2 q = a.env;
    q += b.env;
    auto f = [&](double w, double z) {
        const cplx xi(w, z);
        return a.chi(xi) * b.chi(-xi);
    };
    const cplx val = integrate_r2(f, q, cfg) / kPi;
    return real_probability(val, "state overlap");
}

double state_overlap(const Chi2& a, const Chi2& b, const QuadratureConfig& cfg) {
    Sym4 q = a.env;
    q += b.env;
    auto f = [&](double wa, double za, double wb, double zb) {
        const cplx xa(wa, za);
        const cplx xb(wb, zb);
        return a.chi(xa, xb) * b.chi(-xa, -xb);
    };
    const cplx val = integrate_r4(f, q, cfg) / (kPi * kPi);
    return real_probability(val, "state overlap");
}

}  // namespace cvqt
