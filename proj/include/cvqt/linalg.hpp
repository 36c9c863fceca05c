#pragma once
// Minimal fixed-size real linear algebra (dimensions 2 and 4) for Gaussian
// envelope bookkeeping, plus a dynamically sized complex Hermitian
// eigensolver used for reduced density matrices.
//
// The envelope machinery works with symmetric positive semidefinite forms
// Q such that the Gaussian core of an integrand is exp(-v^T Q v); forms are
// composed by congruence Q += L^T E L when an evaluator is called through a
// real-linear argument map L.

#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "cvqt/types.hpp"

namespace cvqt {

template <int N>
struct Sym {
    std::array<std::array<double, N>, N> m{};

    double& operator()(int i, int j) { return m[i][j]; }
    double operator()(int i, int j) const { return m[i][j]; }

    Sym& operator+=(const Sym& o) {
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) m[i][j] += o.m[i][j];
        return *this;
    }

    static Sym identity(double scale = 1.0) {
        Sym s;
        for (int i = 0; i < N; ++i) s.m[i][i] = scale;
        return s;
    }
};

using Sym2 = Sym<2>;
using Sym4 = Sym<4>;

/// Dense R x C real matrix for argument maps (rows = target coordinates).
template <int R, int C>
struct Mat {
    std::array<std::array<double, C>, R> m{};
    double& operator()(int i, int j) { return m[i][j]; }
    double operator()(int i, int j) const { return m[i][j]; }
};

/// Congruence transform: returns L^T E L (the envelope form E pulled back
/// through the argument map L onto the integration variables).
template <int R, int C>
Sym<C> congruence(const Mat<R, C>& L, const Sym<R>& E) {
    Sym<C> q;
    for (int a = 0; a < C; ++a)
        for (int b = 0; b < C; ++b) {
            double acc = 0.0;
            for (int i = 0; i < R; ++i)
                for (int j = 0; j < R; ++j) acc += L(i, a) * E(i, j) * L(j, b);
            q(a, b) = acc;
        }
    return q;
}

/// Cyclic Jacobi eigendecomposition of a small symmetric matrix.
/// On return `vecs` columns are orthonormal eigenvectors, `vals` the
/// matching eigenvalues. Deterministic, converges quadratically.
template <int N>
void jacobi_eigh(Sym<N> a, std::array<double, static_cast<std::size_t>(N)>& vals,
                 std::array<std::array<double, static_cast<std::size_t>(N)>,
                            static_cast<std::size_t>(N)>& vecs) {
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) vecs[i][j] = (i == j) ? 1.0 : 0.0;
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < N; ++p)
            for (int q = p + 1; q < N; ++q) off += a(p, q) * a(p, q);
        if (off < 1e-30) break;
        for (int p = 0; p < N; ++p)
            for (int q = p + 1; q < N; ++q) {
                if (std::abs(a(p, q)) < 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < N; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < N; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                for (int k = 0; k < N; ++k) {
                    const double vkp = vecs[k][p], vkq = vecs[k][q];
                    vecs[k][p] = c * vkp - s * vkq;
                    vecs[k][q] = s * vkp + c * vkq;
                }
            }
    }
    for (int i = 0; i < N; ++i) vals[i] = a(i, i);
}

template <int N>
double min_eigenvalue(const Sym<N>& q) {
    std::array<double, N> vals;
    std::array<std::array<double, N>, N> vecs;
    jacobi_eigh(q, vals, vecs);
    double mn = vals[0];
    for (int i = 1; i < N; ++i) mn = std::min(mn, vals[i]);
    return mn;
}

/// 4x4 symmetric determinant via LDL-style elimination (enough for the
/// Gaussian purity normalization). Input must be positive definite.
double sym4_det(const Sym4& s);

/// Eigenvalues of an n x n complex Hermitian matrix (row-major storage),
/// classic cyclic Jacobi with complex rotations; the input is destroyed.
std::vector<double> hermitian_eigenvalues(std::vector<cplx>& a, int n);

/// Deterministic pairwise summation (fixed association order independent of
/// accumulation order or thread count upstream).
cplx pairwise_sum(const std::vector<cplx>& v);
double pairwise_sum(const std::vector<double>& v);
cplx pairwise_sum(const cplx* v, std::size_t n);
double pairwise_sum(const double* v, std::size_t n);

}  // namespace cvqt
