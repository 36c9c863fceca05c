#include "cvqt/states.hpp"

#include <cmath>

#include "testing.hpp"

using cvqt::cplx;
using cvqt::InputStateSpec;
using cvqt::ResourceSpec;

namespace {
const cplx kXa(0.31, 0.42);
const cplx kXb(-0.55, 0.23);
const cplx kXi(0.31, 0.42);
}  // namespace

// ---------------------------------------------------------------------------
// Frozen reference values for the resource characteristic functions.
// ---------------------------------------------------------------------------

TEST_CASE("resource chi: frozen reference values") {
    CHECK_NEAR(cvqt::chi_resource(ResourceSpec::tmsv(0.8), kXa, kXb),
               cplx(0.23605058090995112, 0.0), 1e-12);
    CHECK_NEAR(cvqt::chi_resource(ResourceSpec::tmsv(0.6, 1.1), kXa, kXb),
               cplx(0.84304038519215752, 0.0), 1e-12);
    CHECK_NEAR(cvqt::chi_resource(ResourceSpec::squeezed_fock11(0.7), kXa, kXb),
               cplx(0.0098269808055122809, 0.0), 1e-12);
    CHECK_NEAR(
        cvqt::chi_resource(ResourceSpec::bell(0.8, 0.6, 0.9, 2.0), kXa, kXb),
        cplx(0.35018681372833765, 0.0), 1e-12);
    CHECK_NEAR(cvqt::chi_resource(ResourceSpec::photon_subtracted(0.9, 0.7),
                                  kXa, kXb),
               cplx(0.91358727741312618, 0.0), 1e-12);
    CHECK_NEAR(
        cvqt::chi_resource(ResourceSpec::photon_added(0.9, 0.7), kXa, kXb),
        cplx(0.87158620840357093, 0.0), 1e-12);
    const double d1 = 0.8, d2 = 0.55;
    const ResourceSpec sssf = ResourceSpec::sssf(
        0.75, std::cos(d1), std::sin(d1) * std::cos(d2),
        std::sin(d1) * std::sin(d2), 0.5, 1.3);
    CHECK_NEAR(cvqt::chi_resource(sssf, kXa, kXb),
               cplx(-0.088120493456201349, 3.4694469519536142e-18), 1e-12);
    CHECK_NEAR(cvqt::chi_resource(
                   ResourceSpec::squeezed_cat(0.7, 0.6, cplx(0.9, 0.4), 1.2),
                   kXa, kXb),
               cplx(0.16693064894640222, 0.077691763924611981), 1e-12);
    CHECK_NEAR(cvqt::chi_resource(ResourceSpec::tmsv(0.5).with_thermal(0.12, 0.05),
                                  kXa, kXb),
               cplx(0.42792111800093025, 0.0), 1e-12);
}

TEST_CASE("input chi: frozen reference values") {
    CHECK_NEAR(cvqt::chi_input(InputStateSpec::coherent(cplx(0.4, 0.3)), kXi),
               cplx(0.86282581717455631, 0.13040336802500321), 1e-12);
    CHECK_NEAR(cvqt::chi_input(InputStateSpec::squeezed_vacuum(0.6, 0.8), kXi),
               cplx(0.70789370409182284, 0.0), 1e-12);
    CHECK_NEAR(cvqt::chi_input(InputStateSpec::fock1(), kXi),
               cplx(0.63483428672363762, 0.0), 1e-12);
    CHECK_NEAR(cvqt::chi_input(InputStateSpec::squeezed_fock1(0.5, 2.1), kXi),
               cplx(0.18562873881498751, 0.0), 1e-12);
    CHECK_NEAR(cvqt::chi_input(InputStateSpec::photon_added(cplx(0.5, 0.2)), kXi),
               cplx(0.59995142829857528, 0.39229436124145078), 1e-12);
}

// ---------------------------------------------------------------------------
// Normalization and family reductions.
// ---------------------------------------------------------------------------

TEST_CASE("chi at the origin is 1 for every family") {
    const ResourceSpec members[] = {
        ResourceSpec::tmsv(0.6, 1.1),
        ResourceSpec::squeezed_fock11(0.7),
        ResourceSpec::photon_subtracted(0.9, 0.7),
        ResourceSpec::photon_added(0.9, 0.7),
        ResourceSpec::bell(0.8, 0.6, 0.9, 2.0),
        ResourceSpec::sssf(0.75, 0.6, 0.3, 0.742, 0.5, 1.3),
        ResourceSpec::squeezed_cat(0.7, 0.6, cplx(0.9, 0.4), 1.2),
        ResourceSpec::tmsv(0.5).with_thermal(0.12, 0.05),
    };
    for (const auto& m : members) {
        CHECK_NEAR(cvqt::chi_resource(m, cplx(0, 0), cplx(0, 0)),
                   cplx(1.0, 0.0), 1e-12);
    }
    CHECK_NEAR(cvqt::chi_input(InputStateSpec::photon_added(cplx(0.5, 0.2)),
                               cplx(0, 0)),
               cplx(1.0, 0.0), 1e-12);
}

TEST_CASE("Bell family reduces to TMSV at delta = 0 and to the squeezed Fock "
          "pair at delta = pi/2") {
    const cplx pts[][2] = {{kXa, kXb}, {cplx(-0.62, -0.18), cplx(0.44, 0.71)}};
    for (const auto& p : pts) {
        CHECK_NEAR(cvqt::chi_resource(ResourceSpec::bell(0.7, 0.0), p[0], p[1]),
                   cvqt::chi_resource(ResourceSpec::tmsv(0.7), p[0], p[1]),
                   1e-13);
        CHECK_NEAR(
            cvqt::chi_resource(ResourceSpec::bell(0.7, cvqt::kPi / 2), p[0],
                               p[1]),
            cvqt::chi_resource(ResourceSpec::squeezed_fock11(0.7), p[0], p[1]),
            1e-13);
    }
}

TEST_CASE("photon-subtracted/added states are Bell members at the closed "
          "angles") {
    for (const double r : {0.35, 0.9}) {
        const double n = 1.0 / std::sqrt(1.0 + std::tanh(r) * std::tanh(r));
        const double dsub = std::acos(n);
        const double dadd = std::acos(n * std::tanh(r));
        const cplx pts[][2] = {{kXa, kXb},
                               {cplx(0.05, -0.97), cplx(0.31, 0.42)}};
        for (const auto& p : pts) {
            CHECK_NEAR(
                cvqt::chi_resource(ResourceSpec::photon_subtracted(r), p[0],
                                   p[1]),
                cvqt::chi_resource(ResourceSpec::bell(r, dsub), p[0], p[1]),
                1e-12);
            CHECK_NEAR(
                cvqt::chi_resource(ResourceSpec::photon_added(r), p[0], p[1]),
                cvqt::chi_resource(ResourceSpec::bell(r, dadd), p[0], p[1]),
                1e-12);
        }
    }
}

TEST_CASE("SSSF and cat families reduce to TMSV at the degenerate corner") {
    CHECK_NEAR(
        cvqt::chi_resource(ResourceSpec::sssf(0.6, 1.0, 0.0, 0.0), kXa, kXb),
        cvqt::chi_resource(ResourceSpec::tmsv(0.6), kXa, kXb), 1e-13);
    CHECK_NEAR(cvqt::chi_resource(
                   ResourceSpec::squeezed_cat(0.6, 0.0, cplx(1.1, 0.0)), kXa,
                   kXb),
               cvqt::chi_resource(ResourceSpec::tmsv(0.6), kXa, kXb), 1e-13);
}

TEST_CASE("thermal embedding only multiplies by a Gaussian factor") {
    const ResourceSpec base = ResourceSpec::bell(0.5, 0.4, 0.2);
    const ResourceSpec th = base.with_thermal(0.12, 0.05);
    const cplx pure = cvqt::chi_resource(base, kXa, kXb);
    const cplx mixed = cvqt::chi_resource(th, kXa, kXb);
    const double factor =
        std::exp(-0.12 * std::norm(kXa) - 0.05 * std::norm(kXb));
    CHECK_NEAR(mixed, pure * factor, 1e-13);
}

// ---------------------------------------------------------------------------
// Validation.
// ---------------------------------------------------------------------------

TEST_CASE("invalid specs are rejected") {
    CHECK_THROWS_AS(cvqt::validate(ResourceSpec::tmsv(0.5).with_thermal(-0.1, 0.0)),
                    cvqt::SpecError);
    CHECK_THROWS_AS(cvqt::validate(ResourceSpec::sssf(0.5, 0.0, 0.0, 0.0)),
                    cvqt::SpecError);
    CHECK_THROWS_AS(
        cvqt::validate(InputStateSpec::mixture(
            {{0.4, InputStateSpec::fock1()},
             {0.4, InputStateSpec::coherent(cplx(1, 0))}})),
        cvqt::SpecError);
    CHECK_THROWS_AS(cvqt::validate(InputStateSpec::mixture({})),
                    cvqt::SpecError);
    CHECK_THROWS_AS(
        cvqt::validate(InputStateSpec::mixture(
            {{-0.5, InputStateSpec::fock1()},
             {1.5, InputStateSpec::coherent(cplx(1, 0))}})),
        cvqt::SpecError);
    CHECK_NOTHROW(cvqt::validate(InputStateSpec::mixture(
        {{0.5, InputStateSpec::fock1()},
         {0.5, InputStateSpec::coherent(cplx(1, 0))}})));
}

TEST_CASE("SSSF coefficients are normalized internally") {
    // Scaling all three coefficients must not change the state.
    const ResourceSpec a = ResourceSpec::sssf(0.5, 0.8, 0.5, 0.33);
    const ResourceSpec b = ResourceSpec::sssf(0.5, 1.6, 1.0, 0.66);
    CHECK_NEAR(cvqt::chi_resource(a, kXa, kXb),
               cvqt::chi_resource(b, kXa, kXb), 1e-13);
}
