#include "cvqt/measures.hpp"

#include <cmath>

#include "testing.hpp"

using cvqt::cplx;
using cvqt::ResourceSpec;

// ---------------------------------------------------------------------------
// Second moments.
// ---------------------------------------------------------------------------

TEST_CASE("occupation and pair correlation of the twin beam") {
    const double r = 0.8;
    const auto m = cvqt::second_moments(ResourceSpec::tmsv(r));
    CHECK_NEAR(m.n_a, std::sinh(r) * std::sinh(r), 1e-9);
    CHECK_NEAR(m.n_b, std::sinh(r) * std::sinh(r), 1e-9);
    CHECK_NEAR(std::abs(m.cross), std::cosh(r) * std::sinh(r), 1e-9);
    CHECK_NEAR(m.first_a, cplx(0.0, 0.0), 1e-9);
}

TEST_CASE("frozen photon-subtracted moments; derivative and Fock routes "
          "agree") {
    const ResourceSpec pss = ResourceSpec::photon_subtracted(0.8);
    const auto fd = cvqt::second_moments(pss);
    CHECK_NEAR(fd.n_a, 2.6722076118550842, 1e-8);
    CHECK_NEAR(fd.cross, cplx(3.1025176525971094, 0.0), 1e-8);
    const auto fk = cvqt::second_moments_fock(pss);
    CHECK_NEAR(fd.n_a, fk.n_a, 1e-8);
    CHECK_NEAR(fd.n_b, fk.n_b, 1e-8);
    CHECK_NEAR(fd.cross, fk.cross, 1e-8);

    const ResourceSpec bell = ResourceSpec::bell(0.6, 0.7, 0.4);
    const auto fd2 = cvqt::second_moments(bell);
    const auto fk2 = cvqt::second_moments_fock(bell);
    CHECK_NEAR(fd2.n_a, fk2.n_a, 1e-8);
    CHECK_NEAR(fd2.cross, fk2.cross, 1e-8);
}

TEST_CASE("finite-difference moments obey the step-halving contract") {
    const ResourceSpec cat = ResourceSpec::squeezed_cat(0.5, 0.6, cplx(1.0, 0.0));
    const auto a = cvqt::second_moments(cat, 1e-2);
    const auto b = cvqt::second_moments(cat, 5e-3);
    CHECK_NEAR(a.n_a, b.n_a, 1e-9);
    CHECK_NEAR(a.cross, b.cross, 1e-9);
}

TEST_CASE("inseparability: frozen thermal value and the vanishing point") {
    CHECK_NEAR(cvqt::inseparability_delta(
                   ResourceSpec::tmsv(0.5).with_thermal(0.1, 0.1)),
               -0.2072322539260974, 1e-8);
    // Delta crosses zero exactly at n_th = (1 - e^{-2r})/2.
    const double r = 0.4;
    const double n = 0.5 * (1.0 - std::exp(-2.0 * r));
    CHECK_NEAR(cvqt::inseparability_delta(
                   ResourceSpec::tmsv(r).with_thermal(n, n)),
               0.0, 1e-8);
}

// ---------------------------------------------------------------------------
// Entanglement entropy.
// ---------------------------------------------------------------------------

TEST_CASE("entanglement entropy: frozen values") {
    CHECK_NEAR(cvqt::von_neumann_entropy(ResourceSpec::tmsv(0.6)),
               1.2179616356087368, 1e-8);
    CHECK_NEAR(cvqt::von_neumann_entropy(ResourceSpec::photon_subtracted(0.8)),
               2.9299455954372826, 1e-8);
    CHECK_NEAR(cvqt::von_neumann_entropy(ResourceSpec::bell(0.5, 0.7, 0.4)),
               2.1333888472508229, 1e-8);
    CHECK_NEAR(cvqt::von_neumann_entropy(
                   ResourceSpec::squeezed_cat(0.5, 0.6, cplx(1.0, 0.0))),
               1.5087551297075139, 1e-8);
}

TEST_CASE("photon subtraction and addition give identical entropy") {
    CHECK_NEAR(cvqt::von_neumann_entropy(ResourceSpec::photon_subtracted(0.8)),
               cvqt::von_neumann_entropy(ResourceSpec::photon_added(0.8)),
               1e-9);
}

TEST_CASE("twin-beam entropy matches the hyperbolic expression") {
    for (const double r : {0.3, 0.6, 1.0}) {
        const double c2 = std::cosh(r) * std::cosh(r);
        const double s2 = std::sinh(r) * std::sinh(r);
        const double want = c2 * std::log2(c2) - s2 * std::log2(s2);
        CHECK_NEAR(cvqt::von_neumann_entropy(ResourceSpec::tmsv(r)), want,
                   1e-8);
    }
}

TEST_CASE("entropy is defined for pure resources only") {
    CHECK_THROWS_AS(cvqt::von_neumann_entropy(
                        ResourceSpec::tmsv(0.5).with_thermal(0.1, 0.1)),
                    cvqt::SpecError);
}

// ---------------------------------------------------------------------------
// Non-Gaussianity.
// ---------------------------------------------------------------------------

TEST_CASE("non-Gaussianity: frozen values and the Gaussian zero") {
    CHECK_NEAR(cvqt::non_gaussianity(ResourceSpec::tmsv(0.5)), 0.0, 1e-8);
    CHECK_NEAR(cvqt::non_gaussianity(ResourceSpec::photon_subtracted(0.5)),
               0.032004977911574528, 1e-7);
    CHECK_NEAR(cvqt::non_gaussianity(ResourceSpec::squeezed_fock11(0.6)),
               0.49305555555555552, 1e-7);
}

TEST_CASE("non-Gaussianity of the Bell family is squeezing-independent") {
    const double a = cvqt::non_gaussianity(ResourceSpec::bell(0.4, 0.7));
    const double b = cvqt::non_gaussianity(ResourceSpec::bell(0.9, 0.7));
    CHECK_NEAR(a, 0.19341511564846581, 1e-7);
    CHECK_NEAR(a, b, 1e-6);
}

TEST_CASE("Gaussian reference state reproduces the twin-beam chi") {
    const auto ref = cvqt::gaussian_reference(ResourceSpec::tmsv(0.8));
    const cplx xa(0.31, 0.42), xb(-0.55, 0.23);
    CHECK_NEAR(ref.chi(xa, xb), cplx(0.23605058090995112, 0.0), 1e-9);
    CHECK_NEAR(cvqt::gaussian_reference_purity(ResourceSpec::tmsv(0.8)), 1.0,
               1e-8);
}

// ---------------------------------------------------------------------------
// Affinity to the twin-beam manifold.
// ---------------------------------------------------------------------------

TEST_CASE("affinity: frozen value for photon subtraction") {
    const auto aff = cvqt::vacuum_affinity(ResourceSpec::photon_subtracted(0.8));
    CHECK_NEAR(aff.s_star, 1.2532932215521519, 1e-6);
    CHECK_NEAR(aff.g, 0.93488378163304897, 1e-7);
    CHECK_FALSE(aff.at_boundary);
}

TEST_CASE("the twin beam has unit affinity at its own squeezing") {
    for (const double r : {0.5, 0.8}) {
        const auto aff = cvqt::vacuum_affinity(ResourceSpec::tmsv(r));
        CHECK_NEAR(aff.g, 1.0, 1e-6);
        CHECK_NEAR(aff.s_star, r, 1e-6);
    }
}

TEST_CASE("relative fidelity is a simple ratio rebased at the classical "
          "benchmark") {
    CHECK_NEAR(cvqt::relative_fidelity(0.75, 0.5), 0.5, 1e-15);
    CHECK_NEAR(cvqt::relative_fidelity(0.5, 0.5), 0.0, 1e-15);
}
