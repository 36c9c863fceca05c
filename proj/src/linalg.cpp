#include "cvqt/linalg.hpp"

#include <algorithm>

namespace cvqt {

double sym4_det(const Sym4& s) {
    // Gaussian elimination without pivoting; envelope forms are SPD so the
    // leading minors are positive.
    double a[4][4];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a[i][j] = s(i, j);
    double det = 1.0;
    for (int k = 0; k < 4; ++k) {
        det *= a[k][k];
        if (a[k][k] == 0.0) return 0.0;
        for (int i = k + 1; i < 4; ++i) {
            const double f = a[i][k] / a[k][k];
            for (int j = k; j < 4; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

std::vector<double> hermitian_eigenvalues(std::vector<cplx>& a, int n) {
    auto at = [&](int i, int j) -> cplx& { return a[static_cast<size_t>(i) * n + j]; };
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += std::norm(at(p, q));
        if (off < 1e-26) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                const cplx apq = at(p, q);
                const double mod = std::abs(apq);
                if (mod < 1e-300) continue;
                // Unitary 2x2 rotation zeroing the (p,q) element: first strip
                // the phase of a_pq, then a real Jacobi rotation.
                const cplx phase = apq / mod;
                const double app = at(p, p).real(), aqq = at(q, q).real();
                const double theta = (aqq - app) / (2.0 * mod);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const cplx sp = s * phase;  // applied to column p contributions
                for (int k = 0; k < n; ++k) {
                    const cplx akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - std::conj(sp) * akq;
                    at(k, q) = sp * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const cplx apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - sp * aqk;
                    at(q, k) = std::conj(sp) * apk + c * aqk;
                }
            }
    }
    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = at(i, i).real();
    std::sort(vals.begin(), vals.end());
    return vals;
}

namespace {

template <typename T>
T pairwise_impl(const T* v, size_t n) {
    if (n <= 32) {
        T acc{};
        for (size_t i = 0; i < n; ++i) acc += v[i];
        return acc;
    }
    const size_t half = n / 2;
    return pairwise_impl(v, half) + pairwise_impl(v + half, n - half);
}

}  // namespace

cplx pairwise_sum(const std::vector<cplx>& v) {
    return v.empty() ? cplx{} : pairwise_impl(v.data(), v.size());
}

double pairwise_sum(const std::vector<double>& v) {
    return v.empty() ? 0.0 : pairwise_impl(v.data(), v.size());
}

cplx pairwise_sum(const cplx* v, std::size_t n) {
    return n == 0 ? cplx{} : pairwise_impl(v, n);
}

double pairwise_sum(const double* v, std::size_t n) {
    return n == 0 ? 0.0 : pairwise_impl(v, n);
}

}  // namespace cvqt
