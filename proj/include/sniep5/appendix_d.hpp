#ifndef SNIEP5_APPENDIX_D_HPP
#define SNIEP5_APPENDIX_D_HPP

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sniep5/charpoly.hpp"
#include "sniep5/pattern_c.hpp"
#include "sniep5/report.hpp"
#include "sniep5/sqrt_bounds.hpp"

namespace sniep5 {

class PipelineError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Diagonal ranges 0 <= m_ii <= M_ii <= 1/2.
struct DiagBounds {
    std::array<Rational, 5> m, M;

    void validate() const {
        for (int i = 0; i < 5; ++i) {
            if (m[i].sign() < 0 || m[i] > M[i] || M[i] > Rational(1, 2))
                throw std::domain_error("diagonal bounds must satisfy 0 <= m <= M <= 1/2");
        }
    }
};

/// Case 1 ordering b55 >= b11 >= b44 >= b33 >= b22, given m55 <= b55 <= M55.
inline DiagBounds diag_bounds_case1(const Rational& m55, const Rational& M55) {
    if (m55 > M55) throw std::domain_error("empty range");
    const Rational z(0), half(1, 2);
    DiagBounds b;
    b.m[4] = m55;
    b.M[4] = M55;
    b.m[0] = max(z, Rational(1, 8) - M55 / Rational(4));
    b.M[0] = min(Rational(1, 4), min(M55, half - m55));
    b.m[3] = z;
    b.M[3] = min(Rational(1, 6), min(M55, Rational(1, 4) - m55 / Rational(2)));
    b.m[2] = z;
    b.M[2] = min(Rational(1, 8), min(M55, Rational(1, 6) - m55 / Rational(3)));
    b.m[1] = z;
    b.M[1] = min(Rational(1, 10), min(M55, Rational(1, 8) - m55 / Rational(4)));
    b.validate();
    return b;
}

/// Case 2 ordering b11 >= b55 >= b22, b11 >= b44 >= b33 >= b22.
inline DiagBounds diag_bounds_case2(const Rational& m11, const Rational& M11) {
    if (m11 > M11) throw std::domain_error("empty range");
    const Rational z(0), half(1, 2);
    DiagBounds b;
    b.m[0] = m11;
    b.M[0] = M11;
    b.m[3] = z;
    b.M[3] = min(Rational(1, 4), min(M11, half - m11));
    b.m[4] = z;
    b.M[4] = min(Rational(1, 4), min(M11, half - m11));
    b.m[2] = z;
    b.M[2] = min(Rational(1, 6), min(M11, Rational(1, 4) - m11 / Rational(2)));
    b.m[1] = z;
    b.M[1] = min(Rational(1, 10), min(M11, Rational(1, 8) - m11 / Rational(4)));
    b.validate();
    return b;
}

/// Case 3 ordering b55 >= b11 >= b44 >= b22 and b33 >= b44, given ranges for
/// b33 and b55.
inline DiagBounds diag_bounds_case3(const Rational& tm33, const Rational& tM33,
                                    const Rational& tm55, const Rational& tM55) {
    if (tm33 > tM33 || tm55 > tM55) throw std::domain_error("empty range");
    const Rational z(0), half(1, 2);
    DiagBounds b;
    b.m[2] = max(tm33, max(half - Rational(4) * tM55,
                           Rational(1, 6) - Rational(2, 3) * tM55));
    b.M[2] = min(tM33, half - tm55);
    b.m[4] = max(tm55, max(Rational(1, 4) - Rational(3, 2) * b.M[2],
                           Rational(1, 8) - b.M[2] / Rational(4)));
    b.M[4] = min(tM55, half - b.m[2]);
    b.m[0] = max(z, Rational(1, 6) - b.M[2] / Rational(3) - b.M[4] / Rational(3));
    b.M[0] = min(b.M[4], min(half - b.m[2] - b.m[4], Rational(1, 4) - b.m[2] / Rational(2)));
    b.m[3] = z;
    b.M[3] = min(Rational(1, 8),
                 min(min(b.M[2], b.M[4]),
                     min(Rational(1, 4) - b.m[2] / Rational(2) - b.m[4] / Rational(2),
                         min(Rational(1, 6) - b.m[2] / Rational(3),
                             Rational(1, 6) - b.m[4] / Rational(3)))));
    b.m[1] = z;
    b.M[1] = min(Rational(1, 10),
                 min(min(b.M[2], b.M[4]),
                     min(Rational(1, 6) - b.m[2] / Rational(3) - b.m[4] / Rational(3),
                         min(Rational(1, 8) - b.m[2] / Rational(4),
                             Rational(1, 8) - b.m[4] / Rational(4)))));
    b.validate();
    return b;
}

/// Case 4 ordering b11 >= b55 >= b22, b11 >= b44 >= b22, b33 >= b44, given
/// ranges for b11 and b33.
inline DiagBounds diag_bounds_case4(const Rational& tm11, const Rational& tM11,
                                    const Rational& tm33, const Rational& tM33) {
    if (tm11 > tM11 || tm33 > tM33) throw std::domain_error("empty range");
    const Rational z(0), half(1, 2);
    DiagBounds b;
    b.m[0] = max(tm11, max(Rational(1, 4) - Rational(3, 2) * tM33,
                           Rational(1, 8) - tM33 / Rational(4)));
    b.M[0] = tM11;
    b.m[2] = max(tm33, max(half - Rational(4) * b.M[0],
                           Rational(1, 6) - Rational(2, 3) * b.M[0]));
    b.M[2] = min(tM33, half - b.m[0]);
    b.m[3] = z;
    b.M[3] = min(Rational(1, 6),
                 min(min(b.M[0], b.M[2]),
                     min(half - b.m[0] - b.m[2],
                         min(Rational(1, 4) - b.m[0] / Rational(2),
                             Rational(1, 4) - b.m[2] / Rational(2)))));
    b.m[4] = z;
    b.M[4] = min(b.M[0], min(half - b.m[0] - b.m[2], Rational(1, 4) - b.m[2] / Rational(2)));
    b.m[1] = z;
    b.M[1] = min(Rational(1, 10),
                 min(min(b.M[0], b.M[2]),
                     min(Rational(1, 6) - b.m[0] / Rational(3) - b.m[2] / Rational(3),
                         min(Rational(1, 8) - b.m[0] / Rational(4),
                             Rational(1, 8) - b.m[2] / Rational(4)))));
    b.validate();
    return b;
}

inline DiagBounds derive_diag_bounds(int case_id, const std::vector<Rational>& given) {
    switch (case_id) {
        case 1:
            if (given.size() != 2) throw std::domain_error("case 1 takes (m55, M55)");
            return diag_bounds_case1(given[0], given[1]);
        case 2:
            if (given.size() != 2) throw std::domain_error("case 2 takes (m11, M11)");
            return diag_bounds_case2(given[0], given[1]);
        case 3:
            if (given.size() != 4) throw std::domain_error("case 3 takes (m33, M33, m55, M55)");
            return diag_bounds_case3(given[0], given[1], given[2], given[3]);
        case 4:
            if (given.size() != 4) throw std::domain_error("case 4 takes (m11, M11, m33, M33)");
            return diag_bounds_case4(given[0], given[1], given[2], given[3]);
        default:
            throw std::domain_error("case must be 1..4");
    }
}

/// Full intermediate record of one sub-range run.
struct PipelineResult {
    int case_id = 0;
    DiagBounds bounds;

    // exact chain
    Rational m12_sq, m24_sq;
    Rational r12, r12_tilde, M12t_sq;
    Rational r24, r24_tilde, M24t_sq;
    Rational m13_sq, m45_sq, m35_13_sq, m35_45_sq;

    // certified decimal lower bounds
    Rational d12, d13, d24, d35_13, d35_45, d45;

    // relation-improved values; pre-values kept when a relation raised one
    bool star13 = false, star45 = false;
    Rational m35;
    Rational imp12, imp24, imp45;
    std::optional<Rational> pre12, pre24, pre45;

    ExactMatrix bmin{5};
    Rational p_at_1;
};

/// The off-diagonal lower-bound chain at the stated decimal accuracy: exact
/// squares first, then verified 10^-digits truncations.
inline PipelineResult offdiag_lower_bounds(const DiagBounds& b, int digits = 2) {
    b.validate();
    const Rational one(1), quarter(1, 4);
    auto w = [&](int i) { return one - Rational(2) * b.M[i]; };
    auto q = [&](int i) { return one - b.M[i]; };

    PipelineResult r;
    r.bounds = b;
    r.m12_sq = (one + Rational(2) * b.m[3] + Rational(4) * b.m[0] * b.m[1] +
                Rational(4) * b.m[2] * b.m[4]) /
               Rational(4);
    r.m24_sq = (one + Rational(2) * b.m[0] + Rational(4) * b.m[1] * b.m[3] +
                Rational(4) * b.m[2] * b.m[4]) /
               Rational(4);

    r.r12 = Rational(16) * q(2) * q(3) * w(2) * w(3);
    r.r12_tilde = sqrt_lower_bound(r.r12, digits);
    {
        Rational num = (Rational(3) - Rational(2) * b.m[0] - Rational(2) * b.M[2]) *
                       (Rational(3) - Rational(2) * b.m[1] - Rational(2) * b.M[3]);
        Rational den = Rational(4) * q(2) * q(3) + r.r12_tilde + w(2) * w(3);
        if (den.sign() <= 0) throw PipelineError("M12_tilde denominator is not positive");
        r.M12t_sq = num / (Rational(4) * den);
    }
    r.r24 = Rational(16) * q(0) * q(4) * w(0) * w(4);
    r.r24_tilde = sqrt_lower_bound(r.r24, digits);
    {
        Rational num = (Rational(3) - Rational(2) * b.M[0] - Rational(2) * b.m[1]) *
                       (Rational(3) - Rational(2) * b.m[3] - Rational(2) * b.M[4]);
        Rational den = Rational(4) * q(0) * q(4) + r.r24_tilde + w(0) * w(4);
        if (den.sign() <= 0) throw PipelineError("M24_tilde denominator is not positive");
        r.M24t_sq = num / (Rational(4) * den);
    }

    {
        Rational den = Rational(4) * r.M24t_sq - w(1) * w(3);
        if (den.sign() <= 0) throw PipelineError("m13 denominator is not positive");
        r.m13_sq = w(2) * (w(0) + Rational(4) * w(3) * r.m12_sq / den) / Rational(4);
    }
    {
        Rational den = Rational(4) * r.M12t_sq - w(0) * w(1);
        if (den.sign() <= 0) throw PipelineError("m45 denominator is not positive");
        r.m45_sq = w(4) * (w(3) + Rational(4) * w(0) * r.m24_sq / den) / Rational(4);
    }
    {
        Rational den = Rational(4) * r.M12t_sq - w(0) * w(1);
        if (den.sign() <= 0) throw PipelineError("m35_13 denominator is not positive");
        r.m35_13_sq = w(4) * (w(2) + Rational(4) * w(1) * r.m13_sq / den) / Rational(4);
    }
    {
        Rational den = Rational(4) * r.M24t_sq - w(1) * w(3);
        if (den.sign() <= 0) throw PipelineError("m35_45 denominator is not positive");
        r.m35_45_sq = w(2) * (w(4) + Rational(4) * w(1) * r.m45_sq / den) / Rational(4);
    }

    r.d12 = sqrt_lower_bound(r.m12_sq, digits);
    r.d24 = sqrt_lower_bound(r.m24_sq, digits);
    r.d13 = sqrt_lower_bound(r.m13_sq, digits);
    r.d45 = sqrt_lower_bound(r.m45_sq, digits);
    r.d35_13 = sqrt_lower_bound(r.m35_13_sq, digits);
    r.d35_45 = sqrt_lower_bound(r.m35_45_sq, digits);
    return r;
}

/// Raises lower bounds through the off-diagonal relations: m35 is the larger
/// m35 candidate (the star marks the winner by exact-square comparison, both
/// on a tie), m12 and m24 absorb m35, m45 absorbs m13, and in the b33 >= b44
/// cases (3 and 4) m24 absorbs m13 as well.
inline void apply_relations(int case_id, PipelineResult& r) {
    r.case_id = case_id;
    r.star13 = r.m35_13_sq >= r.m35_45_sq;
    r.star45 = r.m35_45_sq >= r.m35_13_sq;
    r.m35 = max(r.d35_13, r.d35_45);

    r.imp12 = max(r.d12, r.m35);
    if (r.imp12 != r.d12) r.pre12 = r.d12;
    r.imp24 = max(r.d24, r.m35);
    if (case_id == 3 || case_id == 4) r.imp24 = max(r.imp24, r.d13);
    if (r.imp24 != r.d24) r.pre24 = r.d24;
    r.imp45 = max(r.d45, r.d13);
    if (r.imp45 != r.d45) r.pre45 = r.d45;
}

/// Assembles B_min from the improved bounds and evaluates P_{B_min}(1)
/// exactly.
inline void build_bmin_and_eval(PipelineResult& r) {
    // B_min keeps the pattern-C zero set; its trace stays below 1/2.
    ExactMatrix m(5);
    for (int i = 0; i < 5; ++i) m.set(i, i, r.bounds.m[i]);
    m.set(0, 1, r.imp12);
    m.set(0, 2, r.d13);
    m.set(1, 3, r.imp24);
    m.set(2, 4, r.m35);
    m.set(3, 4, r.imp45);
    r.bmin = m;
    r.p_at_1 = charpoly_exact(m).eval(Rational(1));
}

struct SubrangeSpec {
    int case_id;
    int index;  // 1-based, as in the tables
    std::vector<Rational> given;
};

inline PipelineResult run_subrange(const SubrangeSpec& spec, int digits = 2) {
    DiagBounds b = derive_diag_bounds(spec.case_id, spec.given);
    PipelineResult r = offdiag_lower_bounds(b, digits);
    apply_relations(spec.case_id, r);
    build_bmin_and_eval(r);
    return r;
}

inline std::vector<SubrangeSpec> appendix_d_subranges() {
    auto Q = [](long n, long d) { return Rational(n, d); };
    std::vector<SubrangeSpec> out;
    out.push_back({1, 1, {Q(0, 1), Q(20, 100)}});
    out.push_back({1, 2, {Q(20, 100), Q(26, 100)}});
    out.push_back({2, 1, {Q(0, 1), Q(14, 100)}});
    out.push_back({2, 2, {Q(14, 100), Q(20, 100)}});
    out.push_back({2, 3, {Q(20, 100), Q(24, 100)}});
    out.push_back({2, 4, {Q(24, 100), Q(28, 100)}});
    out.push_back({2, 5, {Q(28, 100), Q(36, 100)}});
    out.push_back({2, 6, {Q(36, 100), Q(50, 100)}});
    out.push_back({3, 1, {Q(0, 1), Q(12, 100), Q(0, 1), Q(26, 100)}});
    out.push_back({3, 2, {Q(12, 100), Q(26, 100), Q(0, 1), Q(18, 100)}});
    out.push_back({3, 3, {Q(12, 100), Q(26, 100), Q(18, 100), Q(21, 100)}});
    out.push_back({3, 4, {Q(12, 100), Q(26, 100), Q(21, 100), Q(26, 100)}});
    out.push_back({4, 1, {Q(0, 1), Q(15, 100), Q(0, 1), Q(26, 100)}});
    out.push_back({4, 2, {Q(15, 100), Q(25, 100), Q(0, 1), Q(15, 100)}});
    out.push_back({4, 3, {Q(15, 100), Q(25, 100), Q(15, 100), Q(26, 100)}});
    out.push_back({4, 4, {Q(25, 100), Q(40, 100), Q(0, 1), Q(10, 100)}});
    out.push_back({4, 5, {Q(25, 100), Q(40, 100), Q(10, 100), Q(20, 100)}});
    out.push_back({4, 6, {Q(25, 100), Q(40, 100), Q(20, 100), Q(26, 100)}});
    out.push_back({4, 7, {Q(40, 100), Q(50, 100), Q(0, 1), Q(26, 100)}});
    return out;
}

/// One table row as printed: every reproduced cell.
struct SubrangeExpectation {
    int case_id;
    int index;
    std::array<Rational, 5> m, M;
    Rational r12, r12_tilde;
    Rational M12t_sq;  // square of the printed surd
    Rational r24, r24_tilde;
    Rational M24t_sq;
    Rational m12, m13, m24, m35_13, m35_45, m45;  // final decimals
    std::optional<Rational> pre12, pre24, pre45;  // parenthesized pre-values
    bool star13 = false, star45 = false;
    Rational p;
};

namespace detail_d {

inline Rational surd_sq(long mult, long radicand, long den) {
    return Rational(mult) * Rational(mult) * Rational(radicand) / (Rational(den) * Rational(den));
}

}  // namespace detail_d

/// Expected value of every reproduced cell, all 19 sub-ranges.
inline const std::vector<SubrangeExpectation>& appendix_d_expected() {
    static const std::vector<SubrangeExpectation> table = [] {
        auto Q = [](long n, long d = 1) { return Rational(n, d); };
        auto S = detail_d::surd_sq;
        std::vector<SubrangeExpectation> v;
        SubrangeExpectation e;

        // ---- case 1 ----
        e = {};
        e.case_id = 1; e.index = 1;
        e.m = {Q(3, 40), Q(0), Q(0), Q(0), Q(0)};
        e.M = {Q(1, 5), Q(1, 10), Q(1, 8), Q(1, 6), Q(1, 5)};
        e.r12 = Q(35, 6); e.r12_tilde = Q(241, 100); e.M12t_sq = S(1, 56810, 437);
        e.r24 = Q(2304, 625); e.r24_tilde = Q(48, 25); e.M24t_sq = S(13, 1, 22);
        e.m12 = Q(53, 100); e.pre12 = Q(1, 2);
        e.m13 = Q(1, 2);
        e.m24 = Q(53, 100);
        e.m35_13 = Q(53, 100); e.star13 = true;
        e.m35_45 = Q(53, 100); e.star45 = false;
        e.m45 = Q(1, 2); e.pre45 = Q(49, 100);
        e.p = Q(-305646963, 4000000000);
        v.push_back(e);

        e = {};
        e.case_id = 1; e.index = 2;
        e.m = {Q(3, 50), Q(0), Q(0), Q(0), Q(1, 5)};
        e.M = {Q(1, 4), Q(3, 40), Q(1, 10), Q(3, 20), Q(13, 50)};
        e.r12 = Q(4284, 625); e.r12_tilde = Q(261, 100); e.M12t_sq = S(3, 1252230, 6230);
        e.r24 = Q(1332, 625); e.r24_tilde = Q(29, 20); e.M24t_sq = S(1, 60605, 391);
        e.m12 = Q(1, 2);
        e.m13 = Q(49, 100);
        e.m24 = Q(13, 25);
        e.m35_13 = Q(47, 100); e.star13 = true;
        e.m35_45 = Q(23, 50); e.star45 = false;
        e.m45 = Q(49, 100); e.pre45 = Q(41, 100);
        e.p = Q(-136143299, 2500000000);
        v.push_back(e);

        // ---- case 2 ----
        e = {};
        e.case_id = 2; e.index = 1;
        e.m = {Q(0), Q(0), Q(0), Q(0), Q(0)};
        e.M = {Q(7, 50), Q(1, 10), Q(7, 50), Q(7, 50), Q(7, 50)};
        e.r12 = Q(2396304, 390625); e.r12_tilde = Q(247, 100); e.M12t_sq = S(68, 14867, 14867);
        e.r24 = Q(2396304, 390625); e.r24_tilde = Q(247, 100); e.M24t_sq = S(68, 14867, 14867);
        e.m12 = Q(63, 100); e.pre12 = Q(1, 2);
        e.m13 = Q(14, 25);
        e.m24 = Q(63, 100); e.pre24 = Q(1, 2);
        e.m35_13 = Q(63, 100); e.star13 = true;
        e.m35_45 = Q(63, 100); e.star45 = true;
        e.m45 = Q(14, 25);
        e.p = Q(-390487023, 1250000000);
        v.push_back(e);

        e = {};
        e.case_id = 2; e.index = 2;
        e.m = {Q(7, 50), Q(0), Q(0), Q(0), Q(0)};
        e.M = {Q(1, 5), Q(9, 100), Q(1, 6), Q(1, 5), Q(1, 5)};
        e.r12 = Q(64, 15); e.r12_tilde = Q(103, 50); e.M12t_sq = S(1, 17894630, 7690);
        e.r24 = Q(2304, 625); e.r24_tilde = Q(48, 25); e.M24t_sq = S(13, 1, 22);
        e.m12 = Q(1, 2);
        e.m13 = Q(9, 20);
        e.m24 = Q(14, 25);
        e.m35_13 = Q(49, 100); e.star13 = false;
        e.m35_45 = Q(1, 2); e.star45 = true;
        e.m45 = Q(1, 2);
        e.p = Q(-48643, 1000000);
        v.push_back(e);

        e = {};
        e.case_id = 2; e.index = 3;
        e.m = {Q(1, 5), Q(0), Q(0), Q(0), Q(0)};
        e.M = {Q(6, 25), Q(3, 40), Q(3, 20), Q(6, 25), Q(6, 25)};
        e.r12 = Q(58786, 15625); e.r12_tilde = Q(193, 100); e.M12t_sq = S(1, 87262, 542);
        e.r24 = Q(976144, 390625); e.r24_tilde = Q(79, 50); e.M24t_sq = S(9, 10402, 1486);
        e.m12 = Q(1, 2);
        e.m13 = Q(41, 100);
        e.m24 = Q(59, 100);
        e.m35_13 = Q(11, 25); e.star13 = false;
        e.m35_45 = Q(11, 25); e.star45 = true;
        e.m45 = Q(11, 25);
        e.p = Q(-5699171, 500000000);
        v.push_back(e);

        e = {};
        e.case_id = 2; e.index = 4;
        e.m = {Q(6, 25), Q(0), Q(0), Q(0), Q(0)};
        e.M = {Q(7, 25), Q(13, 200), Q(13, 100), Q(1, 4), Q(1, 4)};
        e.r12 = Q(9657, 2500); e.r12_tilde = Q(49, 25); e.M12t_sq = S(1, 279110, 988);
        e.r24 = Q(1188, 625); e.r24_tilde = Q(137, 100); e.M24t_sq = S(1, 366, 30);
        e.m12 = Q(1, 2);
        e.m13 = Q(39, 100);
        e.m24 = Q(3, 5);
        e.m35_13 = Q(21, 50); e.star13 = false;
        e.m35_45 = Q(21, 50); e.star45 = true;
        e.m45 = Q(41, 100);
        e.p = Q(-12411, 4000000);
        v.push_back(e);

        e = {};
        e.case_id = 2; e.index = 5;
        e.m = {Q(7, 25), Q(0), Q(0), Q(0), Q(0)};
        e.M = {Q(9, 25), Q(11, 200), Q(11, 100), Q(11, 50), Q(11, 50)};
        e.r12 = Q(1895166, 390625); e.r12_tilde = Q(11, 5); e.M12t_sq = S(4, 751137, 6767);
        e.r24 = Q(489216, 390625); e.r24_tilde = Q(111, 100); e.M24t_sq = S(8, 465063, 8159);
        e.m12 = Q(1, 2);
        e.m13 = Q(37, 100);
        e.m24 = Q(31, 50);
        e.m35_13 = Q(11, 25); e.star13 = true;
        e.m35_45 = Q(43, 100); e.star45 = false;
        e.m45 = Q(39, 100);
        e.p = Q(-46207263, 2500000000);
        v.push_back(e);

        e = {};
        e.case_id = 2; e.index = 6;
        e.m = {Q(9, 25), Q(0), Q(0), Q(0), Q(0)};
        e.M = {Q(1, 2), Q(7, 200), Q(7, 100), Q(7, 50), Q(7, 50)};
        e.r12 = Q(3095226, 390625); e.r12_tilde = Q(281, 100); e.M12t_sq = S(1, 60285298, 16571);
        e.r24 = Q(0); e.r24_tilde = Q(0); e.M24t_sq = S(1, 1462, 43);
        e.m12 = Q(1, 2);
        e.m13 = Q(6, 25);
        e.m24 = Q(13, 20);
        e.m35_13 = Q(11, 25); e.star13 = true;
        e.m35_45 = Q(11, 25); e.star45 = false;
        e.m45 = Q(9, 25);
        e.p = Q(-72, 15625);
        v.push_back(e);

        // ---- case 3 ----
        e = {};
        e.case_id = 3; e.index = 1;
        e.m = {Q(1, 25), Q(0), Q(0), Q(0), Q(19, 200)};
        e.M = {Q(1, 4), Q(1, 10), Q(3, 25), Q(3, 25), Q(13, 50)};
        e.r12 = Q(2795584, 390625); e.r12_tilde = Q(267, 100); e.M12t_sq = S(1, 73334649, 15863);
        e.r24 = Q(1332, 625); e.r24_tilde = Q(29, 20); e.M24t_sq = S(1, 60605, 391);
        e.m12 = Q(1, 2);
        e.m13 = Q(49, 100);
        e.m24 = Q(51, 100);
        e.m35_13 = Q(23, 50); e.star13 = true;
        e.m35_45 = Q(11, 25); e.star45 = false;
        e.m45 = Q(49, 100); e.pre45 = Q(41, 100);
        e.p = Q(-214977947, 20000000000);
        v.push_back(e);

        e = {};
        e.case_id = 3; e.index = 2;
        e.m = {Q(1, 50), Q(0), Q(3, 25), Q(0), Q(3, 50)};
        e.M = {Q(9, 50), Q(19, 200), Q(13, 50), Q(1, 8), Q(9, 50)};
        e.r12 = Q(2331, 625); e.r12_tilde = Q(193, 100); e.M12t_sq = S(1, 22, 8);
        e.r24 = Q(1721344, 390625); e.r24_tilde = Q(209, 100); e.M24t_sq = S(66, 12973, 12973);
        e.m12 = Q(1, 2);
        e.m13 = Q(9, 20);
        e.m24 = Q(51, 100);
        e.m35_13 = Q(11, 25); e.star13 = false;
        e.m35_45 = Q(9, 20); e.star45 = true;
        e.m45 = Q(49, 100);
        e.p = Q(-335607, 1250000000);
        v.push_back(e);

        e = {};
        e.case_id = 3; e.index = 3;
        e.m = {Q(1, 100), Q(0), Q(3, 25), Q(0), Q(9, 50)};
        e.M = {Q(19, 100), Q(1, 15), Q(13, 50), Q(1, 10), Q(21, 100)};
        e.r12 = Q(63936, 15625); e.r12_tilde = Q(101, 50); e.M12t_sq = S(1, 44526, 362);
        e.r24 = Q(5752701, 1562500); e.r24_tilde = Q(191, 100); e.M24t_sq = S(1, 204021627, 24146);
        e.m12 = Q(13, 25);
        e.m13 = Q(47, 100);
        e.m24 = Q(13, 25);
        e.m35_13 = Q(9, 20); e.star13 = false;
        e.m35_45 = Q(9, 20); e.star45 = true;
        e.m45 = Q(12, 25);
        e.p = Q(-7419049, 156250000);
        v.push_back(e);

        e = {};
        e.case_id = 3; e.index = 4;
        e.m = {Q(0), Q(0), Q(3, 25), Q(0), Q(21, 100)};
        e.M = {Q(17, 100), Q(17, 300), Q(13, 50), Q(17, 200), Q(13, 50)};
        e.r12 = Q(1685979, 390625); e.r12_tilde = Q(207, 100); e.M12t_sq = S(1, 6307787, 4314);
        e.r24 = Q(1216116, 390625); e.r24_tilde = Q(44, 25); e.M24t_sq = S(1, 46730082, 11334);
        e.m12 = Q(13, 25);
        e.m13 = Q(12, 25);
        e.m24 = Q(13, 25);
        e.m35_13 = Q(43, 100); e.star13 = true;
        e.m35_45 = Q(21, 50); e.star45 = false;
        e.m45 = Q(12, 25); e.pre45 = Q(23, 50);
        e.p = Q(-7326711, 156250000);
        v.push_back(e);

        // ---- case 4 ----
        e = {};
        e.case_id = 4; e.index = 1;
        e.m = {Q(3, 50), Q(0), Q(1, 15), Q(0), Q(0)};
        e.M = {Q(3, 20), Q(1, 10), Q(13, 50), Q(3, 20), Q(3, 20)};
        e.r12 = Q(52836, 15625); e.r12_tilde = Q(183, 100); e.M12t_sq = S(3, 828714, 4682);
        e.r24 = Q(14161, 2500); e.r24_tilde = Q(119, 50); e.M24t_sq = S(9, 1, 16);
        e.m12 = Q(1, 2);
        e.m13 = Q(9, 20);
        e.m24 = Q(13, 25);
        e.m35_13 = Q(47, 100); e.star13 = false;
        e.m35_45 = Q(49, 100); e.star45 = true;
        e.m45 = Q(27, 50);
        e.p = Q(-17003473, 468750000);
        v.push_back(e);

        e = {};
        e.case_id = 4; e.index = 2;
        e.m = {Q(3, 20), Q(0), Q(0), Q(0), Q(0)};
        e.M = {Q(1, 4), Q(7, 80), Q(3, 20), Q(3, 20), Q(1, 4)};
        e.r12 = Q(14161, 2500); e.r12_tilde = Q(119, 50); e.M12t_sq = S(3, 2, 8);
        e.r24 = Q(9, 4); e.r24_tilde = Q(3, 2); e.M24t_sq = S(5, 1, 8);
        e.m12 = Q(1, 2);
        e.m13 = Q(23, 50);
        e.m24 = Q(57, 100);
        e.m35_13 = Q(9, 20); e.star13 = true;
        e.m35_45 = Q(9, 20); e.star45 = false;
        e.m45 = Q(23, 50); e.pre45 = Q(11, 25);
        e.p = Q(-1684287, 80000000);
        v.push_back(e);

        e = {};
        e.case_id = 4; e.index = 3;
        e.m = {Q(3, 20), Q(0), Q(3, 20), Q(0), Q(0)};
        e.M = {Q(1, 4), Q(1, 15), Q(13, 50), Q(1, 6), Q(7, 40)};
        e.r12 = Q(1184, 375); e.r12_tilde = Q(177, 100); e.M12t_sq = S(2, 149003, 1367);
        e.r24 = Q(1287, 400); e.r24_tilde = Q(179, 100); e.M24t_sq = S(5, 5406, 612);
        e.m12 = Q(1, 2);
        e.m13 = Q(39, 100);
        e.m24 = Q(57, 100);
        e.m35_13 = Q(21, 50); e.star13 = false;
        e.m35_45 = Q(43, 100); e.star45 = true;
        e.m45 = Q(12, 25);
        e.p = Q(-31285863, 2000000000);
        v.push_back(e);

        e = {};
        e.case_id = 4; e.index = 4;
        e.m = {Q(1, 4), Q(0), Q(0), Q(0), Q(0)};
        e.M = {Q(2, 5), Q(1, 16), Q(1, 10), Q(1, 10), Q(1, 4)};
        e.r12 = Q(5184, 625); e.r12_tilde = Q(72, 25); e.M12t_sq = S(1, 161, 26);
        e.r24 = Q(18, 25); e.r24_tilde = Q(21, 25); e.M24t_sq = S(5, 1507, 274);
        e.m12 = Q(1, 2);
        e.m13 = Q(2, 5);
        e.m24 = Q(61, 100);
        e.m35_13 = Q(43, 100); e.star13 = true;
        e.m35_45 = Q(21, 50); e.star45 = false;
        e.m45 = Q(2, 5); e.pre45 = Q(19, 50);
        e.p = Q(-6702413, 400000000);
        v.push_back(e);

        e = {};
        e.case_id = 4; e.index = 5;
        e.m = {Q(1, 4), Q(0), Q(1, 10), Q(0), Q(0)};
        e.M = {Q(2, 5), Q(1, 20), Q(1, 5), Q(1, 8), Q(3, 20)};
        e.r12 = Q(126, 25); e.r12_tilde = Q(56, 25); e.M12t_sq = S(1, 140910, 732);
        e.r24 = Q(714, 625); e.r24_tilde = Q(53, 50); e.M24t_sq = S(1, 66, 12);
        e.m12 = Q(1, 2);
        e.m13 = Q(7, 20);
        e.m24 = Q(61, 100);
        e.m35_13 = Q(11, 25); e.star13 = true;
        e.m35_45 = Q(11, 25); e.star45 = false;
        e.m45 = Q(43, 100);
        e.p = Q(-136283, 6250000);
        v.push_back(e);

        e = {};
        e.case_id = 4; e.index = 6;
        e.m = {Q(1, 4), Q(0), Q(1, 5), Q(0), Q(0)};
        e.M = {Q(2, 5), Q(1, 60), Q(1, 4), Q(1, 20), Q(1, 20)};
        e.r12 = Q(513, 100); e.r12_tilde = Q(113, 50); e.M12t_sq = S(1, 20155, 278);
        e.r24 = Q(1026, 625); e.r24_tilde = Q(32, 25); e.M24t_sq = S(1, 493, 34);
        e.m12 = Q(13, 25); e.pre12 = Q(1, 2);
        e.m13 = Q(39, 100);
        e.m24 = Q(61, 100);
        e.m35_13 = Q(13, 25); e.star13 = true;
        e.m35_45 = Q(13, 25); e.star45 = false;
        e.m45 = Q(53, 100);
        e.p = Q(-153180277, 1250000000);
        v.push_back(e);

        e = {};
        e.case_id = 4; e.index = 7;
        e.m = {Q(2, 5), Q(0), Q(0), Q(0), Q(0)};
        e.M = {Q(1, 2), Q(1, 40), Q(1, 10), Q(1, 20), Q(1, 10)};
        e.r12 = Q(6156, 625); e.r12_tilde = Q(313, 100); e.M12t_sq = S(1, 105415, 727);
        e.r24 = Q(0); e.r24_tilde = Q(0); e.M24t_sq = S(1, 7, 3);
        e.m12 = Q(1, 2);
        e.m13 = Q(7, 25);
        e.m24 = Q(67, 100);
        e.m35_13 = Q(12, 25); e.star13 = true;
        e.m35_45 = Q(23, 50); e.star45 = false;
        e.m45 = Q(21, 50);
        e.p = Q(-2089397, 31250000);
        v.push_back(e);

        return v;
    }();
    return table;
}

/// Compares every reproduced cell of one sub-range against its expectation.
inline void verify_subrange_cells(const PipelineResult& got, const SubrangeExpectation& want,
                                  VerifyReport& rep) {
    std::string tag = "case" + std::to_string(want.case_id) + ".sub" + std::to_string(want.index);
    auto cell = [&](const std::string& name, const Rational& actual, const Rational& expected) {
        rep.add(tag + "." + name, "table cell " + name, actual == expected,
                actual == expected ? ""
                                   : "expected " + expected.str() + ", actual " + actual.str());
    };
    static const char* diag_names[5] = {"11", "22", "33", "44", "55"};
    for (int i = 0; i < 5; ++i) cell(std::string("m") + diag_names[i], got.bounds.m[i], want.m[i]);
    for (int i = 0; i < 5; ++i) cell(std::string("M") + diag_names[i], got.bounds.M[i], want.M[i]);
    cell("r12", got.r12, want.r12);
    cell("r12_tilde", got.r12_tilde, want.r12_tilde);
    cell("M12_tilde_sq", got.M12t_sq, want.M12t_sq);
    cell("r24", got.r24, want.r24);
    cell("r24_tilde", got.r24_tilde, want.r24_tilde);
    cell("M24_tilde_sq", got.M24t_sq, want.M24t_sq);
    cell("m12", got.imp12, want.m12);
    cell("m13", got.d13, want.m13);
    cell("m24", got.imp24, want.m24);
    cell("m35_13", got.d35_13, want.m35_13);
    cell("m35_45", got.d35_45, want.m35_45);
    cell("m45", got.imp45, want.m45);

    auto opt_cell = [&](const std::string& name, const std::optional<Rational>& actual,
                        const std::optional<Rational>& expected) {
        bool ok = actual.has_value() == expected.has_value() &&
                  (!actual.has_value() || *actual == *expected);
        std::string render_a = actual ? actual->str() : "(none)";
        std::string render_e = expected ? expected->str() : "(none)";
        rep.add(tag + "." + name, "parenthesized pre-improvement value " + name, ok,
                ok ? "" : "expected " + render_e + ", actual " + render_a);
    };
    opt_cell("pre12", got.pre12, want.pre12);
    opt_cell("pre24", got.pre24, want.pre24);
    opt_cell("pre45", got.pre45, want.pre45);

    rep.add(tag + ".star", "the * marks the larger exact m35 candidate",
            got.star13 == want.star13 && got.star45 == want.star45,
            got.star13 == want.star13 && got.star45 == want.star45
                ? ""
                : "expected (" + std::to_string(want.star13) + "," + std::to_string(want.star45) +
                      "), actual (" + std::to_string(got.star13) + "," +
                      std::to_string(got.star45) + ")");
    cell("P_Bmin_1", got.p_at_1, want.p);
    rep.add(tag + ".P_negative", "P_{B_min}(1) < 0", got.p_at_1.sign() < 0,
            got.p_at_1.sign() < 0 ? "" : "value " + got.p_at_1.str());
}

/// Replays all 19 sub-ranges and checks bit-exact agreement with the tables.
inline VerifyReport verify_appendix_d(int digits = 2,
                                      const std::vector<SubrangeExpectation>* expected = nullptr) {
    VerifyReport rep;
    rep.title = "appendix-d";
    const auto& want = expected ? *expected : appendix_d_expected();
    auto specs = appendix_d_subranges();
    if (want.size() != specs.size()) {
        rep.add("table_shape", "19 sub-ranges expected", false,
                "expectation table has " + std::to_string(want.size()) + " rows");
        return rep;
    }
    for (size_t k = 0; k < specs.size(); ++k) {
        PipelineResult got = run_subrange(specs[k], digits);
        verify_subrange_cells(got, want[k], rep);
    }
    return rep;
}

/// sqrt(p/q) in lowest terms rendered as k*sqrt(R)/D with R squarefree, or a
/// plain rational when the root is exact.
inline std::string sqrt_surd_string(const Rational& sq) {
    if (sq.is_zero()) return "0";
    mpz_class p = sq.num(), q = sq.den();
    auto square_split = [](mpz_class n, mpz_class& outer, mpz_class& rest) {
        outer = 1;
        rest = n;
        for (mpz_class f = 2; f * f <= rest; ++f) {
            while (mpz_divisible_p(rest.get_mpz_t(), mpz_class(f * f).get_mpz_t())) {
                rest /= f * f;
                outer *= f;
            }
        }
    };
    mpz_class a, ep, b, eq;
    square_split(p, a, ep);
    square_split(q, b, eq);
    mpz_class radicand = ep * eq;
    mpz_class den = b * eq;
    if (radicand == 1) return Rational(a, den).str();
    std::string out;
    if (a != 1) out += a.get_str() + "*";
    out += "sqrt(" + radicand.get_str() + ")";
    if (den != 1) out += "/" + den.get_str();
    return out;
}

/// CSV mirror of the tables: one row per sub-range, exact strings.
inline std::string appendix_d_tables_csv(int digits = 2) {
    std::ostringstream os;
    os << "case,subrange,m11,m22,m33,m44,m55,M11,M22,M33,M44,M55,"
          "r12,r12_tilde,M12_tilde,r24,r24_tilde,M24_tilde,"
          "m12,m12_pre,m13,m24,m24_pre,m35_13,m35_13_star,m35_45,m35_45_star,m45,m45_pre,"
          "P_Bmin_1\n";
    for (const auto& spec : appendix_d_subranges()) {
        PipelineResult r = run_subrange(spec, digits);
        os << spec.case_id << "," << spec.index;
        for (int i = 0; i < 5; ++i) os << "," << r.bounds.m[i].str();
        for (int i = 0; i < 5; ++i) os << "," << r.bounds.M[i].str();
        os << "," << r.r12.str() << "," << r.r12_tilde.str() << "," << sqrt_surd_string(r.M12t_sq);
        os << "," << r.r24.str() << "," << r.r24_tilde.str() << "," << sqrt_surd_string(r.M24t_sq);
        os << "," << r.imp12.str() << "," << (r.pre12 ? r.pre12->str() : "");
        os << "," << r.d13.str();
        os << "," << r.imp24.str() << "," << (r.pre24 ? r.pre24->str() : "");
        os << "," << r.d35_13.str() << "," << (r.star13 ? "*" : "");
        os << "," << r.d35_45.str() << "," << (r.star45 ? "*" : "");
        os << "," << r.imp45.str() << "," << (r.pre45 ? r.pre45->str() : "");
        os << "," << r.p_at_1.str() << "\n";
    }
    return os.str();
}

}  // namespace sniep5

#endif
