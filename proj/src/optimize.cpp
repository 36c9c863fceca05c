#include "cvqt/optimize.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "cvqt/closed_forms.hpp"
#include "cvqt/numeric.hpp"

namespace cvqt {

namespace {

constexpr double kHalfPi = kPi / 2.0;

// Ideal unit-gain channel: every family optimizer maximizes against this.
ChannelSpec ideal_channel() { return ChannelSpec::ideal(1.0, 1.0); }

/// Guard: the cheap reconstructed objective and a direct quadrature run must
/// agree at the reported optimum.
void check_consistency(double direct, double form) {
    if (std::abs(direct - form) > 1e-7 * std::max(1.0, std::abs(direct))) {
        throw NumericError(
            "optimizer objective disagrees with direct evaluation at the "
            "optimum (quadratic-form reconstruction drifted)");
    }
}

// ---------------------------------------------------------------------------
// Bell family: F(delta) = A cos^2 + beta sin cos + C sin^2, measured from
// three fully converged fidelity evaluations.
// ---------------------------------------------------------------------------

struct BellObjective {
    double a, beta, c;
    double operator()(double d) const {
        const double cd = std::cos(d);
        const double sd = std::sin(d);
        return a * cd * cd + beta * sd * cd + c * sd * sd;
    }
};

BellObjective bell_objective(double r, const InputStateSpec& input,
                             const ThermalContext& ctx,
                             const QuadratureConfig& cfg) {
    const ChannelSpec ch = ideal_channel();
    auto at = [&](double d) {
        ResourceSpec res = ResourceSpec::bell(r, d, 0.0);
        res = res.with_thermal(ctx.nth_a, ctx.nth_b);
        return fidelity(ch, input, res, cfg);
    };
    const double fa = at(0.0);
    const double fc = at(kHalfPi);
    const double fm = at(kPi / 4.0);
    return BellObjective{fa, 2.0 * fm - fa - fc, fc};
}

}  // namespace

OptResult optimize_bell(double r, const InputStateSpec& input,
                        const ThermalContext& ctx,
                        const QuadratureConfig& cfg) {
    require_finite(r, "r");
    ctx.validate();
    const BellObjective form = bell_objective(r, input, ctx, cfg);
    OptResult out;
    out.evaluations = 3;
    auto obj = [&](double d) {
        ++out.evaluations;
        return form(d);
    };
    // Coarse bracket over the full period, then golden section.
    constexpr int kGrid = 256;
    int best = 0;
    double best_f = obj(0.0);
    for (int i = 1; i < kGrid; ++i) {
        const double f = obj(kPi * i / kGrid);
        if (f > best_f) {
            best_f = f;
            best = i;
        }
    }
    const double lo = kPi * (best - 1) / kGrid;
    const double hi = kPi * (best + 1) / kGrid;
    auto [dstar, fstar] = golden_max(obj, lo, hi, 1e-7);
    double delta = dstar;
    if (delta < 0.0) delta += kPi;   // map the periodic bracket edge back
    ResourceSpec res = ResourceSpec::bell(r, delta, 0.0);
    res = res.with_thermal(ctx.nth_a, ctx.nth_b);
    const double direct = fidelity(ideal_channel(), input, res, cfg);
    ++out.evaluations;
    check_consistency(direct, fstar);
    out.f_opt = direct;
    out.argmax["delta"] = delta;
    out.converged = true;
    return out;
}

// ---------------------------------------------------------------------------
// SSSF family: F(c) = c^T W c on the unit sphere of (c0, c1, c2), with W
// measured from six fully converged fidelity evaluations (three basis
// states and three equal-weight pair superpositions).
// ---------------------------------------------------------------------------

namespace {

using Mat3 = std::array<std::array<double, 3>, 3>;

Mat3 sssf_form(double r, const InputStateSpec& input,
               const QuadratureConfig& cfg, int& evaluations) {
    const ChannelSpec ch = ideal_channel();
    auto fid = [&](double c0, double c1, double c2) {
        ++evaluations;
        return fidelity(ch, input, ResourceSpec::sssf(r, c0, c1, c2), cfg);
    };
    Mat3 w{};
    w[0][0] = fid(1, 0, 0);
    w[1][1] = fid(0, 1, 0);
    w[2][2] = fid(0, 0, 1);
    auto off = [&](int m, int k, double f_pair) {
        const double v = f_pair - 0.5 * (w[m][m] + w[k][k]);
        w[m][k] = v;
        w[k][m] = v;
    };
    off(0, 1, fid(1, 1, 0));
    off(0, 2, fid(1, 0, 1));
    off(1, 2, fid(0, 1, 1));
    return w;
}

double sssf_eval(const Mat3& w, double d1, double d2) {
    const double c[3] = {std::cos(d1), std::sin(d1) * std::cos(d2),
                         std::sin(d1) * std::sin(d2)};
    double f = 0.0;
    for (int m = 0; m < 3; ++m)
        for (int k = 0; k < 3; ++k) f += c[m] * w[m][k] * c[k];
    return f;
}

struct Vertex {
    double d1, d2, f;
};

double clamp_angle(double v) { return std::clamp(v, 0.0, kHalfPi); }

}  // namespace

OptResult optimize_sssf(double r, const InputStateSpec& input,
                        const QuadratureConfig& cfg) {
    require_finite(r, "r");
    OptResult out;
    const Mat3 w = sssf_form(r, input, cfg, out.evaluations);
    auto eval = [&](double d1, double d2) {
        ++out.evaluations;
        return sssf_eval(w, clamp_angle(d1), clamp_angle(d2));
    };
    // 32x32 seed grid over the quarter sphere.
    Vertex seed{0.0, 0.0, eval(0.0, 0.0)};
    for (int i = 0; i < 32; ++i) {
        for (int j = 0; j < 32; ++j) {
            const double d1 = kHalfPi * i / 31.0;
            const double d2 = kHalfPi * j / 31.0;
            const double f = eval(d1, d2);
            if (f > seed.f) seed = Vertex{d1, d2, f};
        }
    }
    // Nelder-Mead (reflection 1, expansion 2, contraction 1/2, shrink 1/2).
    const double h = 0.02;
    std::array<Vertex, 3> s = {
        seed,
        Vertex{clamp_angle(seed.d1 + h), seed.d2, 0.0},
        Vertex{seed.d1, clamp_angle(seed.d2 + h), 0.0}};
    s[1].f = eval(s[1].d1, s[1].d2);
    s[2].f = eval(s[2].d1, s[2].d2);
    bool converged = false;
    for (int it = 0; it < 500; ++it) {
        std::sort(s.begin(), s.end(),
                  [](const Vertex& a, const Vertex& b) { return a.f > b.f; });
        const double size =
            std::max(std::hypot(s[1].d1 - s[0].d1, s[1].d2 - s[0].d2),
                     std::hypot(s[2].d1 - s[0].d1, s[2].d2 - s[0].d2));
        if (size < 1e-7) {
            converged = true;
            break;
        }
        const double m1 = 0.5 * (s[0].d1 + s[1].d1);
        const double m2 = 0.5 * (s[0].d2 + s[1].d2);
        Vertex refl{clamp_angle(m1 + (m1 - s[2].d1)),
                    clamp_angle(m2 + (m2 - s[2].d2)), 0.0};
        refl.f = eval(refl.d1, refl.d2);
        if (refl.f > s[0].f) {
            Vertex expand{clamp_angle(m1 + 2.0 * (m1 - s[2].d1)),
                          clamp_angle(m2 + 2.0 * (m2 - s[2].d2)), 0.0};
            expand.f = eval(expand.d1, expand.d2);
            s[2] = (expand.f > refl.f) ? expand : refl;
        } else if (refl.f > s[1].f) {
            s[2] = refl;
        } else {
            Vertex con{clamp_angle(m1 + 0.5 * (s[2].d1 - m1)),
                       clamp_angle(m2 + 0.5 * (s[2].d2 - m2)), 0.0};
            con.f = eval(con.d1, con.d2);
            if (con.f > s[2].f) {
                s[2] = con;
            } else {
                for (int k = 1; k < 3; ++k) {
                    s[k].d1 = clamp_angle(0.5 * (s[k].d1 + s[0].d1));
                    s[k].d2 = clamp_angle(0.5 * (s[k].d2 + s[0].d2));
                    s[k].f = eval(s[k].d1, s[k].d2);
                }
            }
        }
    }
    std::sort(s.begin(), s.end(),
              [](const Vertex& a, const Vertex& b) { return a.f > b.f; });
    const double d1 = s[0].d1;
    const double d2 = s[0].d2;
    const double c0 = std::cos(d1);
    const double c1 = std::sin(d1) * std::cos(d2);
    const double c2 = std::sin(d1) * std::sin(d2);
    const double direct =
        fidelity(ideal_channel(), input, ResourceSpec::sssf(r, c0, c1, c2), cfg);
    ++out.evaluations;
    check_consistency(direct, s[0].f);
    out.f_opt = direct;
    out.argmax["delta1"] = d1;
    out.argmax["delta2"] = d2;
    out.argmax["c0"] = c0;
    out.argmax["c1"] = c1;
    out.argmax["c2"] = c2;
    out.converged = converged;
    return out;
}

OptResult sssf_curve_max(double r, const InputStateSpec& input,
                         const QuadratureConfig& cfg) {
    require_finite(r, "r");
    OptResult out;
    const Mat3 w = sssf_form(r, input, cfg, out.evaluations);
    auto obj = [&](double x) {
        ++out.evaluations;
        const double nrm = std::sqrt(1.0 + x * x + x * x * x * x);
        const double c[3] = {1.0 / nrm, x / nrm, x * x / nrm};
        double f = 0.0;
        for (int m = 0; m < 3; ++m)
            for (int k = 0; k < 3; ++k) f += c[m] * w[m][k] * c[k];
        return f;
    };
    // Coarse bracket, then golden section on the progression ratio.
    constexpr int kGrid = 256;
    int best = 0;
    double best_f = obj(0.0);
    for (int i = 1; i <= kGrid; ++i) {
        const double f = obj(0.999 * i / kGrid);
        if (f > best_f) {
            best_f = f;
            best = i;
        }
    }
    const double lo = 0.999 * std::max(0, best - 1) / kGrid;
    const double hi = 0.999 * std::min(kGrid, best + 1) / kGrid;
    auto [xstar, fstar] = golden_max(obj, lo, hi, 1e-9);
    const double nrm = std::sqrt(1.0 + xstar * xstar + std::pow(xstar, 4));
    const double c0 = 1.0 / nrm;
    const double c1 = xstar / nrm;
    const double c2 = xstar * xstar / nrm;
    const double direct =
        fidelity(ideal_channel(), input, ResourceSpec::sssf(r, c0, c1, c2), cfg);
    ++out.evaluations;
    check_consistency(direct, fstar);
    out.f_opt = direct;
    out.argmax["x"] = xstar;
    out.argmax["delta1"] = std::acos(c0);
    out.argmax["delta2"] = std::atan2(c2, c1);
    out.argmax["c0"] = c0;
    out.argmax["c1"] = c1;
    out.argmax["c2"] = c2;
    out.converged = true;
    return out;
}

// ---------------------------------------------------------------------------
// Cat family (analytic objective) and classical thresholds.
// ---------------------------------------------------------------------------

OptResult optimize_cat(double r, const ThermalContext& ctx) {
    require_finite(r, "r");
    ctx.validate();
    OptResult out;
    auto obj = [&](double g) {
        ++out.evaluations;
        return fidelity_cat_thermal(r, ctx, g);
    };
    constexpr double kCap = 8.0;
    constexpr int kGrid = 256;
    int best = 1;
    double best_f = obj(kCap / kGrid);
    for (int i = 2; i <= kGrid; ++i) {
        const double f = obj(kCap * i / kGrid);
        if (f > best_f) {
            best_f = f;
            best = i;
        }
    }
    const double lo = kCap * std::max(1, best - 1) / kGrid;
    const double hi = kCap * std::min(kGrid, best + 1) / kGrid;
    auto [gstar, fstar] = golden_max(obj, lo, hi, 1e-7);
    out.f_opt = fstar;
    out.argmax["gamma_abs"] = gstar;
    out.converged = gstar < kCap - 1e-5;  // false flags a boundary maximum
    return out;
}

double classical_threshold(ResourceSpec::Family family, double r) {
    require_finite(r, "r");
    auto opt_f = [&](double nth) -> double {
        const ThermalContext ctx{nth, nth};
        switch (family) {
            case ResourceSpec::Family::TMSV:
                return fidelity_tmsv_thermal(r, ctx);
            case ResourceSpec::Family::SqueezedBell: {
                auto [d, f] = golden_max(
                    [&](double delta) {
                        return fidelity_bell_thermal(r, ctx, delta);
                    },
                    0.0, kHalfPi, 1e-9);
                (void)d;
                return f;
            }
            case ResourceSpec::Family::SqueezedCat:
                return optimize_cat(r, ctx).f_opt;
            default:
                throw SpecError(
                    "classical threshold supports the two-mode squeezed "
                    "vacuum, Bell-superposition and cat families only");
        }
    };
    double lo = 0.0;
    double hi = 2.0;
    const double f_lo = opt_f(lo);
    if (std::abs(f_lo - 0.5) <= 1e-12) return 0.0;
    if (f_lo < 0.5) {
        throw NumericError("fidelity is below 1/2 already at n_th = 0");
    }
    if (opt_f(hi) > 0.5) {
        throw NumericError(
            "classical threshold lies outside the search bracket [0, 2]");
    }
    while (hi - lo > 1e-8) {
        const double mid = 0.5 * (lo + hi);
        if (opt_f(mid) > 0.5) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace cvqt
