#ifndef SNIEP5_JACOBI_HPP
#define SNIEP5_JACOBI_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "sniep5/sym_matrix.hpp"

namespace sniep5 {

/// Eigenvalues sorted descending, with a single error radius: the
/// off-diagonal Frobenius norm at termination.
struct Spectrum {
    std::vector<double> values;
    double error_radius = 0.0;
};

struct EigenSystem {
    Spectrum spectrum;
    // Column k of `vectors` (vectors[i][k]) is the eigenvector for values[k].
    std::vector<std::vector<double>> vectors;
};

class JacobiError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline double offdiag_norm(const std::vector<std::vector<double>>& a) {
    double s = 0;
    size_t n = a.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) s += 2.0 * a[i][j] * a[i][j];
    return std::sqrt(s);
}

}  // namespace detail

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
/// tol.  Unconditionally convergent on symmetric input; 100 sweeps is the
/// non-convergence cap.
inline EigenSystem eigen_jacobi_full(const FloatMatrix& m, double tol) {
    if (!(tol > 0)) throw std::domain_error("tolerance must be positive");
    const int n = m.order();
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) v[i][i] = 1.0;

    int sweeps = 0;
    while (detail::offdiag_norm(a) >= tol) {
        if (++sweeps > 100) throw JacobiError("jacobi iteration did not converge in 100 sweeps");
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = a[p][q];
                if (apq == 0.0) continue;
                double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);
                double app = a[p][p], aqq = a[q][q];
                a[p][p] = app - t * apq;
                a[q][q] = aqq + t * apq;
                a[p][q] = a[q][p] = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = a[p][k] = akp - s * (akq + tau * akp);
                    a[k][q] = a[q][k] = akq + s * (akp - tau * akq);
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = vkp - s * (vkq + tau * vkp);
                    v[k][q] = vkq + s * (vkp - tau * vkq);
                }
            }
    }

    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) { return a[x][x] > a[y][y]; });

    EigenSystem out;
    out.spectrum.error_radius = detail::offdiag_norm(a);
    out.spectrum.values.resize(n);
    out.vectors.assign(n, std::vector<double>(n));
    for (int k = 0; k < n; ++k) {
        out.spectrum.values[k] = a[order[k]][order[k]];
        for (int i = 0; i < n; ++i) out.vectors[i][k] = v[i][order[k]];
    }
    return out;
}

inline Spectrum eigen_jacobi(const FloatMatrix& m, double tol) {
    return eigen_jacobi_full(m, tol).spectrum;
}

inline double spectral_radius(const FloatMatrix& m, double tol = 1e-12) {
    Spectrum s = eigen_jacobi(m, tol);
    double r = 0;
    for (double v : s.values) r = std::max(r, std::abs(v));
    return r;
}

/// Unit eigenvector for the largest eigenvalue, sign-fixed so its largest
/// component is positive.  For nonnegative symmetric input this is a Perron
/// vector up to roundoff.
inline std::vector<double> perron_vector(const FloatMatrix& m, double tol = 1e-13) {
    EigenSystem es = eigen_jacobi_full(m, tol);
    int n = m.order();
    std::vector<double> u(n);
    for (int i = 0; i < n; ++i) u[i] = es.vectors[i][0];
    double big = 0;
    for (double x : u)
        if (std::abs(x) > std::abs(big)) big = x;
    double norm = 0;
    for (double x : u) norm += x * x;
    norm = std::sqrt(norm);
    for (double& x : u) {
        x /= (big < 0 ? -norm : norm);
        if (std::abs(x) < 1e-14) x = 0.0;
    }
    return u;
}

}  // namespace sniep5

#endif
