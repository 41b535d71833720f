#ifndef SNIEP5_SPECTRAL_HPP
#define SNIEP5_SPECTRAL_HPP

#include <cmath>
#include <string>
#include <vector>

#include "sniep5/charpoly.hpp"
#include "sniep5/jacobi.hpp"
#include "sniep5/multipoly.hpp"
#include "sniep5/sym_matrix.hpp"

namespace sniep5 {

/// Cauchy interlacing: child eigenvalues (order n-1) separate the parent's
/// (order n), within tol.
inline bool interlaces(const std::vector<double>& parent, const std::vector<double>& child,
                       double tol) {
    if (child.size() + 1 != parent.size()) return false;
    for (size_t k = 0; k < child.size(); ++k) {
        if (child[k] > parent[k] + tol) return false;
        if (child[k] < parent[k + 1] - tol) return false;
    }
    return true;
}

namespace detail {

/// Replaces var^(2k) by value^k throughout; throws if any odd power remains.
inline MultiPoly reduce_even_power(const MultiPoly& p, const std::string& var, long value) {
    unsigned d = p.degree_in(var);
    MultiPoly acc;
    for (unsigned k = 0; k <= d; ++k) {
        MultiPoly c = p.coeff_of(var, k);
        if (c.is_zero()) continue;
        if (k % 2 != 0) throw std::domain_error("odd power of " + var + " survives reduction");
        Rational f(1);
        for (unsigned j = 0; j < k / 2; ++j) f *= Rational(value);
        acc = acc + f * c;
    }
    return acc;
}

}  // namespace detail

struct ExampleMatrixCheck {
    bool spectrum_ok = false;       // numeric spectrum within tolerance
    bool region_violation = false;  // lambda3 > trace and trace < lambda1 / 2
    bool entry_squares_ok = false;  // squared surd entries are the stated rationals
    bool charpoly_ok = false;       // symbolic charpoly equals the target product
    double max_deviation = 0.0;

    bool pass() const {
        return spectrum_ok && region_violation && entry_squares_ok && charpoly_ok;
    }
};

/// The trace-1/4 matrix with spectrum (1, 35/100, 34/100, -72/100, -72/100):
/// lambda3 exceeds the trace, so the trace >= lambda1/2 hypothesis cannot be
/// dropped.  `perturb` shifts entry (0, 0) to exercise the failure path.
inline FloatMatrix example_matrix_numeric(double perturb = 0.0) {
    const double r130 = std::sqrt(130.0) / 25.0;
    const double r70 = 3.0 * std::sqrt(70.0) / 50.0;
    FloatMatrix m(5);
    m.set(0, 0, 2.0 / 25.0 + perturb);
    m.set(0, 1, r130);
    m.set(0, 2, r130);
    m.set(1, 4, r70);
    m.set(2, 3, r70);
    m.set(3, 3, 17.0 / 200.0);
    m.set(4, 4, 17.0 / 200.0);
    m.set(3, 4, 91.0 / 200.0);
    return m;
}

inline ExampleMatrixCheck verify_example_matrix(double perturb = 0.0) {
    ExampleMatrixCheck out;
    FloatMatrix m = example_matrix_numeric(perturb);

    const double target[5] = {1.0, 0.35, 0.34, -0.72, -0.72};
    Spectrum sp = eigen_jacobi(m, 1e-13);
    for (int k = 0; k < 5; ++k)
        out.max_deviation = std::max(out.max_deviation, std::abs(sp.values[k] - target[k]));
    out.spectrum_ok = out.max_deviation < 1e-9;

    // trace 1/4 < lambda1/2 and lambda3 = 34/100 > 1/4, both exact.
    Rational trace = Rational(2, 25) + Rational(17, 200) + Rational(17, 200);
    out.region_violation = trace == Rational(1, 4) && Rational(34, 100) > trace &&
                           trace < Rational(1, 2);

    // The float entries square back to the stated rationals:
    // (sqrt(130)/25)^2 = 130/625 and (3 sqrt(70)/50)^2 = 630/2500 = 63/250.
    out.entry_squares_ok =
        std::abs(m.at(0, 1) * m.at(0, 1) - Rational(130, 625).to_double()) < 1e-14 &&
        std::abs(m.at(1, 4) * m.at(1, 4) - Rational(63, 250).to_double()) < 1e-14;

    // Exact characteristic polynomial: carry the surds as symbols u, w with
    // u^2 = 130, w^2 = 70; all odd powers cancel.
    MultiPoly u = MultiPoly::variable("u"), w = MultiPoly::variable("w");
    MultiPoly lam = MultiPoly::variable("lam");
    auto c = [](long n, long d) { return MultiPoly::constant(Rational(n, d)); };
    MultiPoly z = MultiPoly::constant(Rational(0));
    MultiPoly ru = Rational(1, 25) * u, rw = Rational(3, 50) * w;
    std::vector<std::vector<MultiPoly>> a = {
        {c(2, 25), ru, ru, z, z},
        {ru, z, z, z, rw},
        {ru, z, z, rw, z},
        {z, z, rw, c(17, 200), c(91, 200)},
        {z, rw, z, c(91, 200), c(17, 200)},
    };
    std::vector<std::vector<MultiPoly>> shifted(5, std::vector<MultiPoly>(5));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) shifted[i][j] = (i == j ? lam : z) - a[i][j];
    MultiPoly cp = poly_det(shifted);
    cp = detail::reduce_even_power(cp, "u", 130);
    cp = detail::reduce_even_power(cp, "w", 70);
    MultiPoly targetp = (lam - Rational(1)) * (lam - Rational(35, 100)) *
                        (lam - Rational(34, 100)) * (lam + Rational(72, 100)) *
                        (lam + Rational(72, 100));
    out.charpoly_ok = identity_check(cp, targetp);

    return out;
}

}  // namespace sniep5

#endif
