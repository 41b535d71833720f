#ifndef SNIEP5_SYM_MATRIX_HPP
#define SNIEP5_SYM_MATRIX_HPP

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "sniep5/rational.hpp"

namespace sniep5 {

/// Symmetric matrix of order <= 5 storing the upper triangle only, so
/// symmetry holds by construction.  T is Rational (exact mode) or double
/// (float mode).
template <typename T>
class SymMatrix {
public:
    explicit SymMatrix(int order) : n_(order) {
        if (order < 1 || order > 5) throw std::domain_error("matrix order must be in [1, 5]");
        tri_.assign(static_cast<size_t>(order) * (order + 1) / 2, T{});
    }

    static SymMatrix identity(int order) {
        SymMatrix m(order);
        for (int i = 0; i < order; ++i) m.set(i, i, T{1});
        return m;
    }

    static SymMatrix diagonal(const std::vector<T>& d) {
        SymMatrix m(static_cast<int>(d.size()));
        for (size_t i = 0; i < d.size(); ++i) m.set(static_cast<int>(i), static_cast<int>(i), d[i]);
        return m;
    }

    /// Row-major full matrix; throws if the data is not symmetric.
    static SymMatrix from_rows(const std::vector<std::vector<T>>& rows) {
        SymMatrix m(static_cast<int>(rows.size()));
        for (int i = 0; i < m.n_; ++i) {
            if (static_cast<int>(rows[i].size()) != m.n_)
                throw std::domain_error("matrix rows must be square");
            for (int j = i; j < m.n_; ++j) {
                if (!(rows[i][j] == rows[j][i]))
                    throw std::domain_error("matrix data is not symmetric");
                m.set(i, j, rows[i][j]);
            }
        }
        return m;
    }

    int order() const { return n_; }

    const T& at(int i, int j) const {
        check(i); check(j);
        return tri_[idx(i, j)];
    }
    void set(int i, int j, const T& v) {
        check(i); check(j);
        tri_[idx(i, j)] = v;
    }

    T trace() const {
        T t{};
        for (int i = 0; i < n_; ++i) t += at(i, i);
        return t;
    }

    /// Rows/columns kept, 0-based, strictly increasing.
    SymMatrix principal_submatrix(const std::vector<int>& keep) const {
        if (keep.empty() || static_cast<int>(keep.size()) > n_)
            throw std::domain_error("bad index set");
        for (size_t k = 0; k < keep.size(); ++k) {
            if (keep[k] < 0 || keep[k] >= n_) throw std::domain_error("index out of range");
            if (k > 0 && keep[k] <= keep[k - 1])
                throw std::domain_error("indices must be strictly increasing");
        }
        SymMatrix m(static_cast<int>(keep.size()));
        for (size_t i = 0; i < keep.size(); ++i)
            for (size_t j = i; j < keep.size(); ++j)
                m.set(static_cast<int>(i), static_cast<int>(j), at(keep[i], keep[j]));
        return m;
    }

    /// P M P^T for the permutation taking row i to row perm[i].
    SymMatrix permuted(const std::vector<int>& perm) const {
        if (static_cast<int>(perm.size()) != n_) throw std::domain_error("bad permutation");
        SymMatrix m(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = i; j < n_; ++j) m.set(i, j, at(perm[i], perm[j]));
        return m;
    }

    bool entrywise_nonnegative() const {
        for (const T& v : tri_)
            if (v < T{}) return false;
        return true;
    }

    friend bool operator==(const SymMatrix& a, const SymMatrix& b) {
        return a.n_ == b.n_ && a.tri_ == b.tri_;
    }

private:
    // Upper-triangle index for i <= j after swap.
    static size_t idx_upper(int i, int j, int n) {
        return static_cast<size_t>(i) * n - static_cast<size_t>(i) * (i - 1) / 2 + (j - i);
    }
    size_t idx(int i, int j) const {
        if (i > j) std::swap(i, j);
        return idx_upper(i, j, n_);
    }
    void check(int i) const {
        if (i < 0 || i >= n_) throw std::out_of_range("matrix index");
    }

    int n_;
    std::vector<T> tri_;
};

using ExactMatrix = SymMatrix<Rational>;
using FloatMatrix = SymMatrix<double>;

inline FloatMatrix to_float(const ExactMatrix& m) {
    FloatMatrix f(m.order());
    for (int i = 0; i < m.order(); ++i)
        for (int j = i; j < m.order(); ++j) f.set(i, j, m.at(i, j).to_double());
    return f;
}

/// Exact entries from a float matrix; every double is a dyadic rational.
inline ExactMatrix to_exact(const FloatMatrix& m) {
    ExactMatrix e(m.order());
    for (int i = 0; i < m.order(); ++i)
        for (int j = i; j < m.order(); ++j) {
            mpq_class q(m.at(i, j));
            e.set(i, j, Rational(q));
        }
    return e;
}

}  // namespace sniep5

#endif
