#pragma once
// Shared scalar types, error classes and small value types used across the
// library. Everything is double precision; conjugate phase-space coordinates
// are std::complex<double> in the convention xi = w + i z (hbar = 1/2,
// alpha = x + i p).

#include <complex>
#include <stdexcept>
#include <string>

namespace cvqt {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Invalid state/channel/config description (bad weights, out-of-range
/// gains, unknown keys, ...). CLI exit code 2.
struct SpecError : std::runtime_error {
    explicit SpecError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure: quadrature non-convergence, Fock-truncation overflow,
/// optimizer breakdown. CLI exit code 3.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Filesystem failure (unreadable config, unwritable output). CLI exit code 4.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Thermal embedding of a two-mode resource: mean photon numbers of the
/// noise superimposed on each mode. f() is the combination the analytic
/// fidelity formulas depend on.
struct ThermalContext {
    double nth_a = 0.0;
    double nth_b = 0.0;

    double f() const { return 1.0 + nth_a + nth_b; }

    void validate() const {
        if (!(nth_a >= 0.0) || !(nth_b >= 0.0) || !std::isfinite(nth_a) ||
            !std::isfinite(nth_b)) {
            throw SpecError("thermal occupations must be finite and >= 0");
        }
    }
};

inline void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw SpecError(std::string(what) + " is not finite");
}

inline void require_finite(cplx v, const char* what) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw SpecError(std::string(what) + " is not finite");
}

}  // namespace cvqt
