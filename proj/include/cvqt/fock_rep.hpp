#pragma once
// Truncated Fock-basis synthesis of input states and resource families.
// This layer is the brute-force cross-check for the closed-form evaluators
// in states.hpp and the substrate for the entanglement/affinity measures:
// everything here is built from explicit coefficient ladders plus the
// displacement-operator matrix elements.

#include <vector>

#include "cvqt/states.hpp"
#include "cvqt/types.hpp"

namespace cvqt {

/// Truncated pure two-mode state: amplitudes psi[n_A][n_B] stored row-major
/// with 0 <= n_A, n_B <= n_max. tail_mass = 1 - captured norm.
struct FockTensor {
    std::vector<cplx> amp;
    int n_max = 0;
    double tail_mass = 0.0;
    bool diagonal = false;  // support restricted to n_A == n_B

    int dim() const { return n_max + 1; }
    cplx at(int i, int j) const { return amp[static_cast<size_t>(i) * dim() + j]; }
    cplx& at(int i, int j) { return amp[static_cast<size_t>(i) * dim() + j]; }
};

inline constexpr double kTailTol = 1e-10;
inline constexpr int kDefaultNmax = 40;
inline constexpr int kMaxNmax = 200;

/// <m|D(xi)|n> for arbitrary m, n, via log-factorials and the generalized
/// Laguerre recurrence (stable for the n <= 200 range used here).
cplx displacement_element(int m, int n, cplx xi);

/// Schmidt coefficient ladder of S_AB applied to |00>, |11> or |22>
/// (two-mode squeezing r, phi): the diagonal amplitudes b_n, length n_max+1.
std::vector<cplx> schmidt_ladder(int level, double r, double phi, int n_max);

/// Fock synthesis of a pure resource (n_th must be 0). n_max < 0 selects the
/// automatic policy: start at kDefaultNmax and grow until
/// tail_mass <= kTailTol, erroring past kMaxNmax.
FockTensor synthesize_resource_fock(const ResourceSpec& spec, int n_max = -1);

/// Single-mode synthesis (pure inputs only; mixtures are rejected).
std::vector<cplx> synthesize_input_fock(const InputStateSpec& spec, int n_max = -1);

/// chi(xi_A, xi_B) = sum psi*_{m_A m_B} psi_{n_A n_B}
///                   <m_A|D(xi_A)|n_A> <m_B|D(xi_B)|n_B>.
cplx chi_from_fock(const FockTensor& t, cplx xi_a, cplx xi_b);

/// Single-mode analogue: psi^dag D(xi) psi.
cplx chi_from_fock(const std::vector<cplx>& psi, cplx xi);

/// rho_A[m][n] = sum_k psi[m][k] conj(psi[n][k]) (row-major, dim = n_max+1).
std::vector<cplx> reduced_density(const FockTensor& t);

/// Photon-number mean and pair correlation from a diagonal Schmidt vector:
/// n = sum n |b_n|^2,  <a_A a_B> = sum n b*_{n-1} b_n.
struct SchmidtMoments {
    double n_mean;
    cplx pair;
};
SchmidtMoments schmidt_moments(const std::vector<cplx>& b);

}  // namespace cvqt
