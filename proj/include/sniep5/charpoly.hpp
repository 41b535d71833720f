#ifndef SNIEP5_CHARPOLY_HPP
#define SNIEP5_CHARPOLY_HPP

#include <vector>

#include "sniep5/sym_matrix.hpp"
#include "sniep5/unipoly.hpp"

namespace sniep5 {

/// det by cofactor expansion along the first row; at most 120 products for
/// order 5, every step exact.
inline Rational det_exact(const std::vector<std::vector<Rational>>& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    Rational acc(0);
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Rational>> minor;
        minor.reserve(n - 1);
        for (size_t r = 1; r < n; ++r) {
            std::vector<Rational> row;
            row.reserve(n - 1);
            for (size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        Rational term = m[0][j] * det_exact(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

inline Rational det_exact(const ExactMatrix& m) {
    std::vector<std::vector<Rational>> rows(m.order(), std::vector<Rational>(m.order()));
    for (int i = 0; i < m.order(); ++i)
        for (int j = 0; j < m.order(); ++j) rows[i][j] = m.at(i, j);
    return det_exact(rows);
}

/// Monic characteristic polynomial det(lambda I - M) with exact rational
/// coefficients, by the Faddeev-LeVerrier recursion.
inline UniPoly charpoly_exact(const ExactMatrix& m) {
    int n = m.order();
    std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A[i][j] = m.at(i, j);

    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = Rational(1);
    std::vector<std::vector<Rational>> Mk(n, std::vector<Rational>(n, Rational(0)));
    for (int k = 1; k <= n; ++k) {
        // Mk <- A * (Mk + c_{n-k+1} I)
        std::vector<std::vector<Rational>> t = Mk;
        for (int i = 0; i < n; ++i) t[i][i] += c[n - k + 1];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rational s(0);
                for (int l = 0; l < n; ++l) s += A[i][l] * t[l][j];
                Mk[i][j] = s;
            }
        Rational tr(0);
        for (int i = 0; i < n; ++i) tr += Mk[i][i];
        c[n - k] = -tr / Rational(k);
    }
    return UniPoly(std::move(c));
}

/// Observation: P_M(lambda) < 0 certifies rho(M) > lambda.
inline bool negative_cp_witness(const ExactMatrix& m, const Rational& lambda) {
    return charpoly_exact(m).eval(lambda).sign() < 0;
}

}  // namespace sniep5

#endif
