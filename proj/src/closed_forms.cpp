#include "cvqt/closed_forms.hpp"

#include <cmath>

namespace cvqt {

double fidelity_bell_thermal(double r, const ThermalContext& ctx,
                             double delta) {
    require_finite(r, "r");
    require_finite(delta, "delta");
    ctx.validate();
    const double f = ctx.f();
    const double e2 = std::exp(2.0 * r);
    const double e4 = std::exp(4.0 * r);
    const double num = 1.0 + e2 * f + e4 * f * f +
                       e2 * f * std::cos(2.0 * delta) +
                       (1.0 + e2 * f) * std::sin(2.0 * delta);
    const double den = std::exp(-2.0 * r) * std::pow(1.0 + e2 * f, 3);
    return num / den;
}

double fidelity_tmsv_thermal(double r, const ThermalContext& ctx) {
    require_finite(r, "r");
    ctx.validate();
    return 1.0 / (std::exp(-2.0 * r) + ctx.f());
}

double fidelity_cat(double r, double delta, cplx gamma) {
    require_finite(r, "r");
    require_finite(delta, "delta");
    require_finite(gamma, "gamma");
    const double g2 = std::norm(gamma);
    const double e2 = std::exp(2.0 * r);
    const double cd = std::cos(delta);
    const double sd = std::sin(delta);
    const cplx diff = gamma - std::conj(gamma);
    const cplx num = cd * cd +
                     std::exp(diff * diff / (1.0 + e2)) * (sd * sd) +
                     std::exp(-g2) *
                         (std::exp(gamma * gamma / (1.0 + e2)) +
                          std::exp(std::conj(gamma) * std::conj(gamma) /
                                   (1.0 + e2))) *
                         (sd * cd);
    const double den =
        (1.0 + std::exp(-2.0 * r)) * (1.0 + std::exp(-g2) * std::sin(2.0 * delta));
    return num.real() / den;
}

double fidelity_cat_simplified(double r, double gamma_abs) {
    return fidelity_cat_thermal(r, ThermalContext{}, gamma_abs);
}

double fidelity_cat_thermal(double r, const ThermalContext& ctx,
                            double gamma_abs) {
    require_finite(r, "r");
    require_finite(gamma_abs, "gamma_abs");
    ctx.validate();
    const double g2 = gamma_abs * gamma_abs;
    const double e2f = std::exp(2.0 * r) * ctx.f();
    return (1.0 + std::exp(-g2) * std::exp(g2 / (1.0 + e2f))) /
           (std::exp(-2.0 * r) * (1.0 + e2f) * (1.0 + std::exp(-g2)));
}

double delta_opt_coherent(double r) {
    require_finite(r, "r");
    return 0.5 * std::atan(1.0 + std::exp(-2.0 * r));
}

double delta_opt_fock(double r) {
    require_finite(r, "r");
    const double e2 = std::exp(2.0 * r);
    const double den = 3.0 * (e2 - 1.0) * (e2 - 1.0);
    if (den == 0.0) return kPi / 4.0;  // r -> 0 limit of the arctan argument
    return 0.5 * std::atan(std::exp(-2.0 * r) *
                           (1.0 - e2 + e2 * e2 + 3.0 * e2 * e2 * e2) / den);
}

double delta_opt_coherent_thermal(double r, const ThermalContext& ctx) {
    require_finite(r, "r");
    ctx.validate();
    return 0.5 * std::atan(1.0 + std::exp(-2.0 * r) / ctx.f());
}

}  // namespace cvqt
