#pragma once
// Small shared numeric helpers (1-D golden-section maximization).

#include <cmath>
#include <utility>

namespace cvqt {

/// Golden-section search for the maximum of a unimodal f on [a, b].
/// Returns (argmax, max). Deterministic; ~log_phi((b-a)/tol) evaluations.
template <typename F>
std::pair<double, double> golden_max(F&& f, double a, double b,
                                     double tol = 1e-8) {
    constexpr double kInvPhi = 0.6180339887498949;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = f(x1);
        }
    }
    const double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

}  // namespace cvqt
