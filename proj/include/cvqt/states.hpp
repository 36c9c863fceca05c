#pragma once
// Closed-form Wigner characteristic functions chi(xi) = Tr(rho D(xi)) for
// all supported single-mode input states and two-mode entangled resource
// families, plus the exact Gaussian-envelope forms the quadrature engine
// uses to place its nodes.

#include <vector>

#include "cvqt/linalg.hpp"
#include "cvqt/types.hpp"

namespace cvqt {

// ---------------------------------------------------------------- inputs

struct InputStateSpec {
    enum class Kind {
        Coherent,             // |beta>
        SqueezedVacuum,       // S(s e^{i phi_s}) |0>
        Fock1,                // |1>
        SqueezedFock1,        // S(s e^{i phi_s}) |1>
        PhotonAddedCoherent,  // a^dag |beta> / sqrt(1+|beta|^2)
        Mixture               // convex combination of the pure kinds above
    };

    Kind kind = Kind::Coherent;
    cplx beta{0.0, 0.0};
    double s = 0.0;
    double phi_s = 0.0;
    std::vector<std::pair<double, InputStateSpec>> components;  // Mixture only

    static InputStateSpec coherent(cplx beta);
    static InputStateSpec squeezed_vacuum(double s, double phi_s = 0.0);
    static InputStateSpec fock1();
    static InputStateSpec squeezed_fock1(double s, double phi_s = 0.0);
    static InputStateSpec photon_added(cplx beta);
    static InputStateSpec mixture(std::vector<std::pair<double, InputStateSpec>> parts);
};

/// Throws SpecError on bad mixtures (negative weights, sum != 1, nesting).
void validate(const InputStateSpec& spec);

cplx chi_input(const InputStateSpec& spec, cplx xi);

/// Symmetric form Q with |Gaussian core of chi_input| = exp(-v^T Q v),
/// v = (w, z). For mixtures, a positive lower bound on the decay of every
/// component (isotropic min-eigenvalue bound).
Sym2 input_envelope(const InputStateSpec& spec);

// --------------------------------------------------------------- resources

struct ResourceSpec {
    enum class Family {
        TMSV,              // S_AB |00>
        SqueezedFock11,    // S_AB |11>
        PhotonSubtracted,  // a_A a_B S_AB |00>, normalized
        PhotonAdded,       // a_A^dag a_B^dag S_AB |00>, normalized
        SqueezedBell,      // S_AB (cos d |00> + e^{i th} sin d |11>)
        SSSF,              // S_AB (c0|00> + c1 e^{i th1}|11> + c2 e^{i th2}|22>)/norm
        SqueezedCat        // N S_AB (cos d |00> + e^{i th} sin d |gamma,gamma>)
    };

    Family family = Family::TMSV;
    double r = 0.0;
    double phi = kPi;  // squeezing phase; protocol convention default
    double delta = 0.0;
    double theta = 0.0;
    double c0 = 1.0, c1 = 0.0, c2 = 0.0;  // SSSF, normalized by the evaluator
    double theta1 = 0.0, theta2 = 0.0;
    cplx gamma{0.0, 0.0};
    double nth_a = 0.0, nth_b = 0.0;  // thermal embedding (0 = pure)

    bool pure() const { return nth_a == 0.0 && nth_b == 0.0; }

    static ResourceSpec tmsv(double r, double phi = kPi);
    static ResourceSpec squeezed_fock11(double r, double phi = kPi);
    static ResourceSpec photon_subtracted(double r, double phi = kPi);
    static ResourceSpec photon_added(double r, double phi = kPi);
    static ResourceSpec bell(double r, double delta, double theta = 0.0,
                             double phi = kPi);
    static ResourceSpec sssf(double r, double c0, double c1, double c2,
                             double theta1 = 0.0, double theta2 = 0.0,
                             double phi = kPi);
    static ResourceSpec squeezed_cat(double r, double delta, cplx gamma,
                                     double theta = 0.0, double phi = kPi);

    ResourceSpec with_thermal(double na, double nb) const;
};

/// Throws SpecError on invalid parameters (all-zero SSSF coefficients,
/// degenerate cat normalization, negative thermal occupation).
void validate(const ResourceSpec& spec);

cplx chi_resource(const ResourceSpec& spec, cplx xi_a, cplx xi_b);

/// Symmetric form Q with |Gaussian core of chi_resource| = exp(-v^T Q v),
/// v = (w_A, z_A, w_B, z_B); includes the thermal multiplier.
Sym4 resource_envelope(const ResourceSpec& spec);

}  // namespace cvqt
