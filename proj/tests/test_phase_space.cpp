#include "cvqt/phase_space.hpp"

#include "testing.hpp"

using cvqt::cplx;

TEST_CASE("two-mode Bogoliubov map composes with its inverse to identity") {
    const cplx xa(0.31, 0.42), xb(-0.55, 0.23);
    for (const double phi : {0.0, 1.1, cvqt::kPi}) {
        const auto [ya, yb] = cvqt::bogoliubov_pair(xa, xb, 0.8, phi);
        const auto [za, zb] = cvqt::bogoliubov_pair(ya, yb, -0.8, phi);
        CHECK_NEAR(za, xa, 1e-12);
        CHECK_NEAR(zb, xb, 1e-12);
    }
}

TEST_CASE("two-mode Bogoliubov map at r = 0 is the identity") {
    const cplx xa(-0.62, -0.18), xb(0.44, 0.71);
    const auto [ya, yb] = cvqt::bogoliubov_pair(xa, xb, 0.0, 0.7);
    CHECK_NEAR(ya, xa, 1e-15);
    CHECK_NEAR(yb, xb, 1e-15);
}

TEST_CASE("single-mode Bogoliubov map composes with its inverse to identity") {
    const cplx xi(0.05, -0.97);
    const cplx y = cvqt::bogoliubov_single(xi, 0.6, 0.8);
    CHECK_NEAR(cvqt::bogoliubov_single(y, -0.6, 0.8), xi, 1e-12);
}

TEST_CASE("beam splitter map preserves the two-mode norm") {
    const cplx xa(0.31, 0.42), xb(-0.55, 0.23);
    for (const double theta : {0.3, cvqt::kPi / 4.0, 1.2}) {
        const auto [ya, yb] = cvqt::beam_split(xa, xb, theta);
        CHECK_NEAR(std::norm(ya) + std::norm(yb),
                   std::norm(xa) + std::norm(xb), 1e-12);
    }
}

TEST_CASE("displacement phase is unimodular and trivial at alpha = 0") {
    const cplx xi(0.31, 0.42);
    CHECK_NEAR(cvqt::displacement_phase(xi, cplx(0.0, 0.0)), cplx(1.0, 0.0),
               1e-15);
    CHECK_NEAR(std::abs(cvqt::displacement_phase(xi, cplx(0.7, -0.4))), 1.0,
               1e-14);
}

TEST_CASE("single-mode envelope matrix agrees with the scalar map") {
    const double s = 0.6, phi = 0.8;
    const auto m = cvqt::bogoliubov_single_matrix(s, phi);
    const cplx xi(0.31, 0.42);
    const cplx y = cvqt::bogoliubov_single(xi, s, phi);
    const double w = m(0, 0) * xi.real() + m(0, 1) * xi.imag();
    const double z = m(1, 0) * xi.real() + m(1, 1) * xi.imag();
    CHECK_NEAR(cplx(w, z), y, 1e-12);
}

TEST_CASE("two-mode envelope matrix agrees with the scalar map") {
    const double r = 0.8, phi = 1.1;
    const auto m = cvqt::bogoliubov_pair_matrix(r, phi);
    const cplx xa(0.31, 0.42), xb(-0.55, 0.23);
    const auto [ya, yb] = cvqt::bogoliubov_pair(xa, xb, r, phi);
    const double v[4] = {xa.real(), xa.imag(), xb.real(), xb.imag()};
    double out[4];
    for (int i = 0; i < 4; ++i) {
        out[i] = 0.0;
        for (int j = 0; j < 4; ++j) out[i] += m(i, j) * v[j];
    }
    CHECK_NEAR(cplx(out[0], out[1]), ya, 1e-12);
    CHECK_NEAR(cplx(out[2], out[3]), yb, 1e-12);
}
