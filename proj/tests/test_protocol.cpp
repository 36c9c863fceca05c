#include "cvqt/protocol.hpp"

#include <cmath>

#include "testing.hpp"

using cvqt::ChannelSpec;
using cvqt::cplx;
using cvqt::InputStateSpec;
using cvqt::ResourceSpec;

namespace {
const InputStateSpec kCoh = InputStateSpec::coherent(cplx(0.4, 0.3));
const ResourceSpec kRes = ResourceSpec::tmsv(0.5);
const cplx kPts[] = {cplx(0.31, 0.42), cplx(-0.55, 0.23), cplx(0.05, -0.97)};
}  // namespace

TEST_CASE("output chi is normalized at the origin") {
    const ChannelSpec channels[] = {
        ChannelSpec::ideal(),
        ChannelSpec::ideal(0.9, 0.85),
        ChannelSpec::asymmetric_bs(0.65),
        ChannelSpec::imprecise(0.9, 1.1),
        ChannelSpec::lossy_homodyne(0.25, 0.4, {0.3, 0.2}, {0.15, -0.1}),
    };
    for (const auto& ch : channels) {
        CHECK_NEAR(cvqt::output_chi(ch, kCoh, kRes, cplx(0, 0)),
                   cplx(1.0, 0.0), 1e-12);
    }
}

TEST_CASE("lossy homodyne with transparent detectors is the ideal channel") {
    const ChannelSpec lossless =
        ChannelSpec::lossy_homodyne(0.0, 0.0, {0.3, 0.2}, {0.15, -0.1});
    const ChannelSpec ideal = ChannelSpec::ideal();
    const ResourceSpec res = ResourceSpec::bell(0.6, 0.4, 0.1);
    for (const cplx& xi : kPts) {
        CHECK_NEAR(cvqt::output_chi(lossless, kCoh, res, xi),
                   cvqt::output_chi(ideal, kCoh, res, xi), 1e-10);
    }
}

TEST_CASE("balanced asymmetric splitter reduces to the ideal channel") {
    const ChannelSpec bs = ChannelSpec::asymmetric_bs(cvqt::kPi / 4.0);
    const ChannelSpec ideal = ChannelSpec::ideal();
    for (const cplx& xi : kPts) {
        CHECK_NEAR(cvqt::output_chi(bs, kCoh, kRes, xi),
                   cvqt::output_chi(ideal, kCoh, kRes, xi), 1e-12);
    }
}

TEST_CASE("imprecise measurement only damps the output chi") {
    const ChannelSpec noisy = ChannelSpec::imprecise(0.9, 1.1);
    const ChannelSpec ideal = ChannelSpec::ideal();
    for (const cplx& xi : kPts) {
        const double a = std::abs(cvqt::output_chi(noisy, kCoh, kRes, xi));
        const double b = std::abs(cvqt::output_chi(ideal, kCoh, kRes, xi));
        CHECK(a <= b + 1e-14);
    }
}

TEST_CASE("perfect-correlation hook turns the unit-gain channel into the "
          "identity") {
    for (const cplx& xi : kPts) {
        CHECK_NEAR(cvqt::testhook::output_chi_epr(ChannelSpec::ideal(), kCoh, xi),
                   cvqt::chi_input(kCoh, xi), 1e-12);
    }
}

TEST_CASE("channel validation rejects out-of-range parameters") {
    CHECK_THROWS_AS(cvqt::validate(ChannelSpec::ideal(0.0, 1.0)),
                    cvqt::SpecError);
    CHECK_THROWS_AS(cvqt::validate(ChannelSpec::ideal(-0.5, 1.0)),
                    cvqt::SpecError);
    CHECK_THROWS_AS(cvqt::validate(ChannelSpec::asymmetric_bs(0.0)),
                    cvqt::SpecError);
    CHECK_THROWS_AS(cvqt::validate(ChannelSpec::asymmetric_bs(cvqt::kPi / 2)),
                    cvqt::SpecError);
    // Non-unit gain cannot be combined with lossy homodyne detection.
    ChannelSpec bad = ChannelSpec::lossy_homodyne(0.2, 0.3, {0.3, 0.2}, {0.15, -0.1});
    bad.gx = 0.9;
    CHECK_THROWS_AS(cvqt::validate(bad), cvqt::SpecError);
    CHECK_NOTHROW(cvqt::validate(ChannelSpec::ideal(0.9, 0.85)));
}
