#ifndef SNIEP5_SOLVER_HPP
#define SNIEP5_SOLVER_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sniep5/jacobi.hpp"
#include "sniep5/rational.hpp"
#include "sniep5/sym_matrix.hpp"

namespace sniep5 {

/// Candidate spectrum, five exact values kept sorted descending.
class SpectrumList {
public:
    explicit SpectrumList(std::vector<Rational> values) : v_(std::move(values)) {
        if (v_.size() != 5) throw std::invalid_argument("spectrum must have exactly 5 entries");
        was_sorted_ = std::is_sorted(v_.begin(), v_.end(),
                                     [](const Rational& a, const Rational& b) { return a > b; });
        std::sort(v_.begin(), v_.end(), [](const Rational& a, const Rational& b) { return a > b; });
    }

    const Rational& operator[](int k) const { return v_[k]; }
    const std::vector<Rational>& values() const { return v_; }
    bool input_was_sorted() const { return was_sorted_; }

    Rational trace() const {
        Rational t(0);
        for (const auto& x : v_) t += x;
        return t;
    }

    SpectrumList scaled(const Rational& c) const {
        std::vector<Rational> s;
        s.reserve(5);
        for (const auto& x : v_) s.push_back(c * x);
        return SpectrumList(std::move(s));
    }

private:
    std::vector<Rational> v_;
    bool was_sorted_ = true;
};

enum class VerdictKind { realizable, not_realizable, out_of_region };
enum class FailedCondition { perron, mcdonald_neumann, lambda3 };

inline const char* to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::realizable: return "realizable";
        case VerdictKind::not_realizable: return "not-realizable";
        case VerdictKind::out_of_region: return "out-of-region";
    }
    return "?";
}
inline const char* to_string(FailedCondition c) {
    switch (c) {
        case FailedCondition::perron: return "perron";
        case FailedCondition::mcdonald_neumann: return "mcdonald_neumann";
        case FailedCondition::lambda3: return "lambda3";
    }
    return "?";
}

struct Certificate {
    FloatMatrix matrix{5};
    double residual = 0.0;
    std::vector<std::string> construction_trace;
};

struct Verdict {
    VerdictKind kind = VerdictKind::out_of_region;
    std::optional<FailedCondition> failed;
    std::optional<Certificate> certificate;
};

/// The three conditions, decided exactly.  The region gate trace >= lambda1/2
/// comes first; on its boundary the list counts as in-region.
inline Verdict check_conditions(const SpectrumList& s) {
    Verdict v;
    Rational t = s.trace();
    if (Rational(2) * t < s[0]) {
        v.kind = VerdictKind::out_of_region;
        return v;
    }
    if (s[0] < -s[4]) {  // lambda1 = max |lambda| fails
        v.kind = VerdictKind::not_realizable;
        v.failed = FailedCondition::perron;
        return v;
    }
    if (s[1] + s[4] > t) {
        v.kind = VerdictKind::not_realizable;
        v.failed = FailedCondition::mcdonald_neumann;
        return v;
    }
    if (s[2] > t) {
        v.kind = VerdictKind::not_realizable;
        v.failed = FailedCondition::lambda3;
        return v;
    }
    v.kind = VerdictKind::realizable;
    return v;
}

/// sigma' = sigma / (2t): trace becomes exactly 1/2 and lambda1' <= 1 iff the
/// region condition held.  Returns (sigma', scale) with sigma = scale * sigma'.
inline std::pair<SpectrumList, Rational> normalize(const SpectrumList& s) {
    Rational t = s.trace();
    if (t.sign() <= 0) throw std::domain_error("normalization requires positive trace");
    Rational scale = Rational(2) * t;
    return {s.scaled(Rational(1) / scale), scale};
}

class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

struct Block {
    FloatMatrix mat{1};
    double perron_root = 0.0;
    std::vector<double> perron_vec{1.0};
};

inline Block block1(double lambda) {
    if (lambda < -1e-12) throw ConstructionError("1x1 block requires a nonnegative value");
    Block b;
    b.mat = FloatMatrix(1);
    b.mat.set(0, 0, std::max(lambda, 0.0));
    b.perron_root = b.mat.at(0, 0);
    b.perron_vec = {1.0};
    return b;
}

inline Block block2(double alpha, double mu) {
    if (alpha < std::abs(mu) - 1e-12)
        throw ConstructionError("2x2 block requires alpha >= |mu|");
    Block b;
    b.mat = FloatMatrix(2);
    b.mat.set(0, 0, (alpha + mu) / 2);
    b.mat.set(1, 1, (alpha + mu) / 2);
    b.mat.set(0, 1, std::max((alpha - mu) / 2, 0.0));
    b.perron_root = alpha;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    b.perron_vec = {inv_sqrt2, inv_sqrt2};
    return b;
}

}  // namespace detail

/// Joins two symmetric nonnegative blocks through their Perron vectors with
/// coupling rho = sqrt((gamma1 - alpha)(gamma1 - beta)); the two Perron roots
/// are replaced by gamma1 and alpha + beta - gamma1, every other eigenvalue
/// is kept.
inline FloatMatrix glue(const FloatMatrix& a, double alpha, const std::vector<double>& u,
                        const FloatMatrix& b, double beta, const std::vector<double>& v,
                        double gamma1) {
    if (gamma1 < alpha - 1e-12) throw ConstructionError("glue target below the larger Perron root");
    if (alpha < beta - 1e-12) throw ConstructionError("glue requires alpha >= beta");
    const int na = a.order(), nb = b.order();
    if (static_cast<int>(u.size()) != na || static_cast<int>(v.size()) != nb)
        throw ConstructionError("Perron vector length mismatch");
    double rho = std::sqrt(std::max(gamma1 - alpha, 0.0) * std::max(gamma1 - beta, 0.0));
    FloatMatrix c(na + nb);
    for (int i = 0; i < na; ++i)
        for (int j = i; j < na; ++j) c.set(i, j, a.at(i, j));
    for (int i = 0; i < nb; ++i)
        for (int j = i; j < nb; ++j) c.set(na + i, na + j, b.at(i, j));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j) c.set(i, na + j, rho * u[i] * v[j]);
    return c;
}

namespace detail {

inline Block glue_blocks(const Block& a, const Block& b, double gamma1) {
    Block out;
    out.mat = glue(a.mat, a.perron_root, a.perron_vec, b.mat, b.perron_root, b.perron_vec, gamma1);
    out.perron_root = gamma1;
    double rho = std::sqrt(std::max(gamma1 - a.perron_root, 0.0) *
                           std::max(gamma1 - b.perron_root, 0.0));
    double x = rho, y = gamma1 - a.perron_root;
    double norm = std::hypot(x, y);
    if (norm < 1e-300) {
        x = 1.0;
        y = 0.0;
    } else {
        x /= norm;
        y /= norm;
    }
    out.perron_vec.clear();
    for (double e : a.perron_vec) out.perron_vec.push_back(x * e);
    for (double e : b.perron_vec) out.perron_vec.push_back(y * e);
    return out;
}

/// Recursive realizer for lists of length <= 5 that satisfy the Perron and
/// trace conditions (plus lambda3 <= trace at length 5).
inline Block realize_block(const std::vector<Rational>& lam, std::vector<std::string>& trace) {
    const size_t n = lam.size();
    auto d = [&](size_t k) { return lam[k].to_double(); };
    if (n == 1) {
        trace.push_back("leaf (" + lam[0].str() + ")");
        return block1(d(0));
    }
    if (n == 2) {
        trace.push_back("2x2 block (" + lam[0].str() + ", " + lam[1].str() + ")");
        return block2(d(0), d(1));
    }
    if (lam[1].sign() <= 0) {
        // Fold the smallest value into the Perron root, then split it back
        // out against a zero singleton.
        std::vector<Rational> inner(lam.begin(), lam.end() - 1);
        inner[0] = lam[0] + lam[n - 1];
        std::sort(inner.begin(), inner.end(),
                  [](const Rational& a, const Rational& b) { return a > b; });
        trace.push_back("fold " + lam[n - 1].str() + " into the Perron root");
        Block a = realize_block(inner, trace);
        Block zero = block1(0.0);
        return glue_blocks(a, zero, d(0));
    }
    // Two leading positives: split the Perron mass across two blocks.
    Rational tail_sum(0);
    for (size_t k = 2; k + 1 < n; ++k) tail_sum += lam[k];
    Rational alpha = max(lam[1], -tail_sum);
    Rational beta = lam[0] + lam[1] - alpha;
    std::vector<Rational> left{alpha};
    for (size_t k = 2; k + 1 < n; ++k) left.push_back(lam[k]);
    std::vector<Rational> right{beta, lam[n - 1]};
    trace.push_back("split Perron mass: alpha=" + alpha.str() + ", beta=" + beta.str());
    Block a = realize_block(left, trace);
    Block b = realize_block(right, trace);
    if (beta > alpha) std::swap(a, b);
    return glue_blocks(a, b, d(0));
}

}  // namespace detail

/// Constructive sufficiency: builds a certificate matrix for a spectrum that
/// passed check_conditions, validating it against the numeric eigensolver
/// before returning.
inline Certificate realize(const SpectrumList& s, double jacobi_tol = 1e-12,
                           double residual_tol = 1e-8) {
    Verdict v = check_conditions(s);
    if (v.kind != VerdictKind::realizable)
        throw std::invalid_argument("realize requires a spectrum passing check_conditions");

    Certificate cert;
    bool all_zero = true;
    for (const auto& x : s.values())
        if (!x.is_zero()) all_zero = false;

    if (all_zero) {
        cert.matrix = FloatMatrix(5);
        cert.construction_trace.push_back("zero spectrum: zero matrix");
    } else if (s[2].sign() >= 0) {
        cert.construction_trace.push_back("lambda3 >= 0: diag(lambda3) + 4x4 realizer");
        std::vector<Rational> rest{s[0], s[1], s[3], s[4]};
        detail::Block b4 = detail::realize_block(rest, cert.construction_trace);
        FloatMatrix m(5);
        m.set(0, 0, s[2].to_double());
        for (int i = 0; i < 4; ++i)
            for (int j = i; j < 4; ++j) m.set(i + 1, j + 1, b4.mat.at(i, j));
        cert.matrix = m;
    } else {
        detail::Block b = detail::realize_block(s.values(), cert.construction_trace);
        cert.matrix = b.mat;
    }

    Spectrum sp = eigen_jacobi(cert.matrix, jacobi_tol);
    double worst = 0;
    for (int k = 0; k < 5; ++k)
        worst = std::max(worst, std::abs(sp.values[k] - s[k].to_double()));
    cert.residual = worst;
    if (worst > residual_tol)
        throw ConstructionError("certificate residual " + std::to_string(worst) +
                                " exceeds tolerance");
    if (!cert.matrix.entrywise_nonnegative())
        throw ConstructionError("certificate has a negative entry");
    return cert;
}

/// check + realize in one step, per the CLI contract.
inline Verdict decide(const SpectrumList& s, bool with_certificate) {
    Verdict v = check_conditions(s);
    if (v.kind == VerdictKind::realizable && with_certificate) v.certificate = realize(s);
    return v;
}

}  // namespace sniep5

#endif
