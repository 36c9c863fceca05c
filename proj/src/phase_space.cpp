#include "cvqt/phase_space.hpp"

#include <cmath>

namespace cvqt {

std::pair<cplx, cplx> bogoliubov_pair(cplx xi_a, cplx xi_b, double r, double phi) {
    require_finite(xi_a, "xi_a");
    require_finite(xi_b, "xi_b");
    require_finite(r, "r");
    require_finite(phi, "phi");
    const double ch = std::cosh(r), sh = std::sinh(r);
    const cplx e = std::polar(1.0, phi);
    return {ch * xi_a + e * sh * std::conj(xi_b),
            ch * xi_b + e * sh * std::conj(xi_a)};
}

cplx bogoliubov_single(cplx xi, double s, double phi_s) {
    require_finite(xi, "xi");
    require_finite(s, "s");
    require_finite(phi_s, "phi_s");
    return std::cosh(s) * xi + std::polar(1.0, phi_s) * std::sinh(s) * std::conj(xi);
}

std::pair<cplx, cplx> beam_split(cplx xi_a, cplx xi_b, double theta) {
    require_finite(xi_a, "xi_a");
    require_finite(xi_b, "xi_b");
    require_finite(theta, "theta");
    const double c = std::cos(theta), s = std::sin(theta);
    return {c * xi_a - s * xi_b, s * xi_a + c * xi_b};
}

cplx displacement_phase(cplx xi, cplx alpha) {
    require_finite(xi, "xi");
    require_finite(alpha, "alpha");
    // e^{2i (z x' - w p')} with xi = w + iz, alpha = x' + ip'.
    return std::polar(1.0, 2.0 * (xi.imag() * alpha.real() - xi.real() * alpha.imag()));
}

Mat<2, 2> bogoliubov_single_matrix(double s, double phi_s) {
    const double ch = std::cosh(s), sh = std::sinh(s);
    const double cp = std::cos(phi_s), sp = std::sin(phi_s);
    Mat<2, 2> m;
    // w' = (ch + sh cos) w + sh sin z ;  z' = sh sin w + (ch - sh cos) z.
    m(0, 0) = ch + sh * cp;
    m(0, 1) = sh * sp;
    m(1, 0) = sh * sp;
    m(1, 1) = ch - sh * cp;
    return m;
}

Mat<4, 4> bogoliubov_pair_matrix(double r, double phi) {
    const double ch = std::cosh(r), sh = std::sinh(r);
    const double cp = std::cos(phi), sp = std::sin(phi);
    Mat<4, 4> m;
    // Rows: (w'_A, z'_A, w'_B, z'_B) as functions of (w_A, z_A, w_B, z_B).
    m(0, 0) = ch;  m(0, 2) = sh * cp;  m(0, 3) = sh * sp;
    m(1, 1) = ch;  m(1, 2) = sh * sp;  m(1, 3) = -sh * cp;
    m(2, 2) = ch;  m(2, 0) = sh * cp;  m(2, 1) = sh * sp;
    m(3, 3) = ch;  m(3, 0) = sh * sp;  m(3, 1) = -sh * cp;
    return m;
}

}  // namespace cvqt
