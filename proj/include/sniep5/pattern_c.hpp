#ifndef SNIEP5_PATTERN_C_HPP
#define SNIEP5_PATTERN_C_HPP

#include <string>
#include <vector>

#include "sniep5/charpoly.hpp"
#include "sniep5/pattern_h.hpp"
#include "sniep5/radical_cmp.hpp"
#include "sniep5/report.hpp"

namespace sniep5 {

/// Parameters of the trace-1/2 pattern-C matrix, zero set
/// {(1,4),(1,5),(2,3),(2,5),(3,4)}.
struct CParams {
    Rational b11, b22, b33, b44, b55;
    Rational b12, b13, b24, b35, b45;

    void validate() const {
        for (const Rational* v : {&b11, &b22, &b33, &b44, &b55, &b12, &b13, &b24, &b35, &b45})
            if (v->sign() < 0) throw std::domain_error("pattern-C parameters must be nonnegative");
        if (b11 + b22 + b33 + b44 + b55 != Rational(1, 2))
            throw std::domain_error("pattern-C requires trace 1/2");
    }
};

inline ExactMatrix build_c(const CParams& p) {
    p.validate();
    ExactMatrix m(5);
    m.set(0, 0, p.b11);
    m.set(1, 1, p.b22);
    m.set(2, 2, p.b33);
    m.set(3, 3, p.b44);
    m.set(4, 4, p.b55);
    m.set(0, 1, p.b12);
    m.set(0, 2, p.b13);
    m.set(1, 3, p.b24);
    m.set(2, 4, p.b35);
    m.set(3, 4, p.b45);
    return m;
}

/// Exact truth values of the lemma-chain inequalities, radicals compared in
/// squared form, positivity guards reported through `applicable`.
inline PredicateReport c_predicates(const CParams& p) {
    p.validate();
    PredicateReport rep;
    const Rational one(1), half(1, 2), quarter(1, 4);
    auto sq = [](const Rational& x) { return x * x; };
    const Rational w1 = one - Rational(2) * p.b11, w2 = one - Rational(2) * p.b22,
                   w3 = one - Rational(2) * p.b33, w4 = one - Rational(2) * p.b44,
                   w5 = one - Rational(2) * p.b55;
    const Rational q1 = one - p.b11, q2 = one - p.b22, q3 = one - p.b33, q4 = one - p.b44,
                   q5 = one - p.b55;

    rep.add("b12_upper", lt_sqrt(p.b12, q1 * q2));
    {
        Rational den = q1 * q2 - sq(p.b12);
        bool app = den.sign() > 0;
        bool holds = false;
        if (app) {
            Rational inner = q4 - q1 * sq(p.b24) / den;
            holds = inner.sign() >= 0 && leq_sqrt(p.b45, q5 * inner);
        }
        rep.add("b45_upper", holds, app);
    }
    {
        bool suff = leq_sqrt(p.b12, quarter * w1 * w2);
        rep.add("b12_sufficient", suff);
        rep.add("b12_lower", !suff);
    }
    {
        Rational den = Rational(4) * sq(p.b12) - w1 * w2;
        bool app = den.sign() > 0;
        bool suff = app && leq_sqrt(p.b45, quarter * w5 * (w4 + Rational(4) * w1 * sq(p.b24) / den));
        rep.add("b45_sufficient", suff, app);
        rep.add("b45_lower", app && !suff, app);
    }
    rep.add("b24_upper", lt_sqrt(p.b24, q2 * q4));
    {
        Rational den = q2 * q4 - sq(p.b24);
        bool app = den.sign() > 0;
        bool holds = false;
        if (app) {
            Rational inner = q1 - q4 * sq(p.b12) / den;
            holds = inner.sign() >= 0 && leq_sqrt(p.b13, q3 * inner);
        }
        rep.add("b13_upper", holds, app);
    }
    {
        bool suff = leq_sqrt(p.b24, quarter * w2 * w4);
        rep.add("b24_sufficient", suff);
        rep.add("b24_lower", !suff);
    }
    {
        Rational den = Rational(4) * sq(p.b24) - w2 * w4;
        bool app = den.sign() > 0;
        bool suff = app && leq_sqrt(p.b13, quarter * w3 * (w1 + Rational(4) * w4 * sq(p.b12) / den));
        rep.add("b13_sufficient", suff, app);
        rep.add("b13_lower", app && !suff, app);
    }
    {
        bool suff = leq_sqrt(p.b35, quarter * w3 * w5);
        rep.add("b35_sufficient_2345a", suff);
        rep.add("b35_lower", !suff);
    }
    {
        Rational den = Rational(4) * sq(p.b24) - w2 * w4;
        bool app = den.sign() > 0;
        bool suff = app && leq_sqrt(p.b35, quarter * w3 * (w5 + Rational(4) * w2 * sq(p.b45) / den));
        rep.add("b35_sufficient_2345b", suff, app);
        rep.add("b35_lower_2345", app && !suff, app);
    }
    {
        Rational den = Rational(4) * sq(p.b12) - w1 * w2;
        bool app = den.sign() > 0;
        bool suff = app && leq_sqrt(p.b35, quarter * w5 * (w3 + Rational(4) * w2 * sq(p.b13) / den));
        rep.add("b35_sufficient_1235", suff, app);
        rep.add("b35_lower_1235", app && !suff, app);
    }
    {
        bool app = w2.sign() > 0 && w3.sign() > 0;
        bool holds = false;
        if (app) {
            Rational f1 = Rational(4) * sq(p.b24) / w2 - w4;
            Rational f2 = Rational(4) * sq(p.b24) / w3 - w5;
            holds = f1.sign() >= 0 && f2.sign() >= 0 && lt_sqrt(p.b45, quarter * f1 * f2);
        }
        rep.add("b45_better_upper", holds, app);
    }
    {
        bool app = w2.sign() > 0 && w5.sign() > 0;
        bool holds = false;
        if (app) {
            Rational f1 = Rational(4) * sq(p.b12) / w2 - w1;
            Rational f2 = Rational(4) * sq(p.b12) / w5 - w3;
            holds = f1.sign() >= 0 && f2.sign() >= 0 && lt_sqrt(p.b13, quarter * f1 * f2);
        }
        rep.add("b13_better_upper", holds, app);
    }
    rep.add("b24_better_lower",
            gt_sqrt(p.b24, quarter * (one + Rational(2) * p.b11 +
                                      Rational(4) * p.b22 * p.b44 + Rational(4) * p.b33 * p.b55)));
    rep.add("b12_better_lower",
            gt_sqrt(p.b12, quarter * (one + Rational(2) * p.b44 +
                                      Rational(4) * p.b11 * p.b22 + Rational(4) * p.b33 * p.b55)));
    {
        // b24 < sqrt(N) / (2 (2 sqrt(Q15) + sqrt(R15))) with
        // N = (3-2b11-2b22)(3-2b44-2b55)
        Rational N = (Rational(3) - Rational(2) * p.b11 - Rational(2) * p.b22) *
                     (Rational(3) - Rational(2) * p.b44 - Rational(2) * p.b55);
        Rational Q15 = q1 * q5, R15 = w1 * w5;
        Rational K = N - Rational(4) * sq(p.b24) * (Rational(4) * Q15 + R15);
        bool holds = K.sign() > 0 &&
                     Rational(256) * sq(sq(p.b24)) * Q15 * R15 < K * K;
        rep.add("b24_better_upper", holds);
    }
    {
        Rational N = (Rational(3) - Rational(2) * p.b11 - Rational(2) * p.b33) *
                     (Rational(3) - Rational(2) * p.b22 - Rational(2) * p.b44);
        Rational Q34 = q3 * q4, R34 = w3 * w4;
        Rational K = N - Rational(4) * sq(p.b12) * (Rational(4) * Q34 + R34);
        bool holds = K.sign() > 0 &&
                     Rational(256) * sq(sq(p.b12)) * Q34 * R34 < K * K;
        rep.add("b12_better_upper", holds);
    }

    rep.add("rel_b12_geq_b35", p.b12 >= p.b35);
    rep.add("rel_b24_geq_b35", p.b24 >= p.b35);
    rep.add("rel_b45_geq_b13", p.b45 >= p.b13);
    rep.add("rel_b24_geq_b13", p.b24 >= p.b13, p.b33 >= p.b44);

    return rep;
}

namespace cexpr {

using hexpr::C;
using hexpr::V;

/// Pattern-C matrix with symbolic entries.
inline std::vector<std::vector<MultiPoly>> symbolic_c() {
    const MultiPoly z;
    return {
        {V("b11"), V("b12"), V("b13"), z, z},
        {V("b12"), V("b22"), z, V("b24"), z},
        {V("b13"), z, V("b33"), z, V("b35")},
        {z, V("b24"), z, V("b44"), V("b45")},
        {z, z, V("b35"), V("b45"), V("b55")},
    };
}

inline std::vector<std::vector<MultiPoly>> conjugate(const std::vector<std::vector<MultiPoly>>& m,
                                                     const std::vector<int>& perm) {
    std::vector<std::vector<MultiPoly>> out(5, std::vector<MultiPoly>(5));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) out[i][j] = m[perm[i]][perm[j]];
    return out;
}

inline bool matrices_equal(const std::vector<std::vector<MultiPoly>>& a,
                           const std::vector<std::vector<MultiPoly>>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j)
            if (!identity_check(a[i][j], b[i][j])) return false;
    return true;
}

}  // namespace cexpr

/// The asserted expansions of the pattern-C section.
inline VerifyReport verify_c_identities() {
    using namespace cexpr;
    VerifyReport rep;
    rep.title = "identities-c";
    const Rational one(1), half(1, 2);

    {
        // The shared 4x4 lemma: M = [[x1,y1,y2,0],[y1,x2,0,y3],[y2,0,x3,0],[0,y3,0,x4]].
        MultiPoly x1 = V("x1"), x2 = V("x2"), x3 = V("x3"), x4 = V("x4");
        MultiPoly y1 = V("y1"), y2 = V("y2"), y3 = V("y3");
        const MultiPoly z;
        std::vector<std::vector<MultiPoly>> M = {
            {x1, y1, y2, z}, {y1, x2, z, y3}, {y2, z, x3, z}, {z, y3, z, x4}};
        auto P_at = [&](const std::vector<int>& idx, const Rational& lam) {
            return hexpr::symbolic_p_sub(M, idx, lam);
        };
        rep.add("lemma10_P123_at_1",
                "P_{M[1,2,3]}(1) = -(1-x3) y1^2 - (1-x2)(y2^2 - (1-x1)(1-x3))",
                identity_check(P_at({0, 1, 2}, one),
                               MultiPoly() - (C(1) - x3) * y1 * y1 -
                                   (C(1) - x2) * (y2 * y2 - (C(1) - x1) * (C(1) - x3))));
        rep.add("lemma10_P_at_1",
                "P_M(1) = -((1-x1)(1-x3) - y2^2) y3^2 + (1-x4)((1-x2)((1-x1)(1-x3) - y2^2) - (1-x3) y1^2)",
                identity_check(P_at({0, 1, 2, 3}, one),
                               MultiPoly() - ((C(1) - x1) * (C(1) - x3) - y2 * y2) * y3 * y3 +
                                   (C(1) - x4) * ((C(1) - x2) * ((C(1) - x1) * (C(1) - x3) -
                                                                 y2 * y2) -
                                                  (C(1) - x3) * y1 * y1)));
        MultiPoly w1 = C(1) - C(2) * x1, w2 = C(1) - C(2) * x2, w3 = C(1) - C(2) * x3,
                  w4 = C(1) - C(2) * x4;
        rep.add("lemma10_P_at_half",
                "P_M(1/2) = (1/4)(4 y2^2 - (1-2x1)(1-2x3)) y3^2 - (1/16)(1-2x4)(...)",
                identity_check(P_at({0, 1, 2, 3}, half),
                               C(1, 4) * (C(4) * y2 * y2 - w1 * w3) * y3 * y3 -
                                   C(1, 16) * w4 *
                                       (w2 * (C(4) * y2 * y2 - w1 * w3) +
                                        C(4) * w3 * y1 * y1)));
    }

    {
        auto B = symbolic_c();
        // Conjugation by the 5-cycle permutation; applying it five times
        // returns the matrix itself.
        std::vector<int> q = {1, 3, 0, 4, 2};
        const MultiPoly z;
        std::vector<std::vector<MultiPoly>> expect1 = {
            {V("b22"), V("b24"), V("b12"), z, z},
            {V("b24"), V("b44"), z, V("b45"), z},
            {V("b12"), z, V("b11"), z, V("b13")},
            {z, V("b45"), z, V("b55"), V("b35")},
            {z, z, V("b13"), V("b35"), V("b33")},
        };
        auto cur = conjugate(B, q);
        rep.add("q_orbit_1", "Q B Q^-1 matches the printed matrix", matrices_equal(cur, expect1));
        std::vector<std::vector<MultiPoly>> expect2 = {
            {V("b44"), V("b45"), V("b24"), z, z},
            {V("b45"), V("b55"), z, V("b35"), z},
            {V("b24"), z, V("b22"), z, V("b12")},
            {z, V("b35"), z, V("b33"), V("b13")},
            {z, z, V("b12"), V("b13"), V("b11")},
        };
        cur = conjugate(cur, q);
        rep.add("q_orbit_2", "Q^2 B Q^-2 matches the printed matrix", matrices_equal(cur, expect2));
        std::vector<std::vector<MultiPoly>> expect3 = {
            {V("b55"), V("b35"), V("b45"), z, z},
            {V("b35"), V("b33"), z, V("b13"), z},
            {V("b45"), z, V("b44"), z, V("b24")},
            {z, V("b13"), z, V("b11"), V("b12")},
            {z, z, V("b24"), V("b12"), V("b22")},
        };
        cur = conjugate(cur, q);
        rep.add("q_orbit_3", "Q^3 B Q^-3 matches the printed matrix", matrices_equal(cur, expect3));
        std::vector<std::vector<MultiPoly>> expect4 = {
            {V("b33"), V("b13"), V("b35"), z, z},
            {V("b13"), V("b11"), z, V("b12"), z},
            {V("b35"), z, V("b55"), z, V("b45")},
            {z, V("b12"), z, V("b22"), V("b24")},
            {z, z, V("b45"), V("b24"), V("b44")},
        };
        cur = conjugate(cur, q);
        rep.add("q_orbit_4", "Q^4 B Q^-4 matches the printed matrix", matrices_equal(cur, expect4));
        cur = conjugate(cur, q);
        rep.add("q_orbit_closure", "Q^5 B Q^-5 = B", matrices_equal(cur, B));

        std::vector<int> pperm = {3, 1, 4, 0, 2};
        std::vector<std::vector<MultiPoly>> expectp = {
            {V("b44"), V("b24"), V("b45"), z, z},
            {V("b24"), V("b22"), z, V("b12"), z},
            {V("b45"), z, V("b55"), z, V("b35")},
            {z, V("b12"), z, V("b11"), V("b13")},
            {z, z, V("b35"), V("b13"), V("b33")},
        };
        rep.add("p_conjugation", "P B P^-1 matches the printed matrix",
                matrices_equal(conjugate(B, pperm), expectp));
    }

    {
        // Critical point of f4 carried with p = sqrt(Q15), r = sqrt(R15).
        MultiPoly b11 = V("b11"), b22 = V("b22"), b44 = V("b44"), b55 = V("b55");
        MultiPoly p = V("p"), r = V("r");
        MultiPoly Q12 = (C(1) - b11) * (C(1) - b22), R12 = (C(1) - C(2) * b11) * (C(1) - C(2) * b22);
        MultiPoly Q45 = (C(1) - b44) * (C(1) - b55), R45 = (C(1) - C(2) * b44) * (C(1) - C(2) * b55);
        MultiPoly x0num = p * R12 + C(2) * r * Q12;  // x0 = x0num / (4p + 2r)
        MultiPoly den = C(4) * p + C(2) * r;
        rep.add("f4_piece_gap_upper", "(Q12 - x0)(4p + 2r) = p (4 Q12 - R12)",
                identity_check(Q12 * den - x0num, p * (C(4) * Q12 - R12)));
        rep.add("f4_piece_gap_lower", "(4 x0 - R12)(4p + 2r) = 2 r (4 Q12 - R12)",
                identity_check(C(4) * x0num - R12 * den, C(2) * r * (C(4) * Q12 - R12)));
        rep.add("f4_piece_denominator", "p^2 2r + r^2 p = p r (2p + r)",
                identity_check(p * p * (C(2) * r) + r * r * p, p * r * (C(2) * p + r)));
        // Assembled closed form, cleared of denominators via the pieces.
        MultiPoly N = Q45 - C(1, 4) * R45;
        MultiPoly lhs = C(4) * N * (p * (C(4) * Q12 - R12)) * (C(2) * r * (C(4) * Q12 - R12)) *
                        (C(2) * p + r).pow(2);
        MultiPoly rhs = (C(4) * Q45 - R45) * (C(4) * Q12 - R12) *
                        (p * r * (C(2) * p + r) * (C(4) * Q12 - R12)) * (C(4) * p + C(2) * r);
        rep.add("f4_max_value",
                "f4(x0) = (4 Q45 - R45)(4 Q12 - R12) / (4 (2 sqrt(Q15) + sqrt(R15))^2)",
                identity_check(lhs, rhs));
    }

    {
        // Squared-chain equivalences behind the b24 and b12 improved lower
        // bounds: a pure polynomial identity plus the trace rewrite.
        MultiPoly b11 = V("b11"), b22 = V("b22"), b33 = V("b33"), b44 = V("b44"), b55 = V("b55");
        MultiPoly b12 = V("b12"), b24 = V("b24"), Y = V("Y");
        MultiPoly w1 = C(1) - C(2) * b11, w2 = C(1) - C(2) * b22, w3 = C(1) - C(2) * b33,
                  w4 = C(1) - C(2) * b44, w5 = C(1) - C(2) * b55;
        MultiPoly D12 = C(4) * b12 * b12 - w1 * w2;
        MultiPoly R24 = w2 * w4, R35 = w3 * w5;
        MultiPoly lhs42 = D12 * (C(4) * Y - R24) * (C(4) * Y - R35) -
                          w4 * w5 * w2 * w3 * D12 - C(4) * w5 * w1 * w2 * w3 * Y;
        MultiPoly rhs42 = C(4) * Y * (D12 * (C(4) * Y - R24 - R35) - w1 * w2 * w3 * w5);
        rep.add("eq42_pure", "the cleared b45-bound chain factors through 4 b24^2",
                identity_check(lhs42, rhs42));
        MultiPoly traced = (R24 + R35 -
                            (C(1) + C(2) * b11 + C(4) * b22 * b44 + C(4) * b33 * b55))
                               .substitute({{"b55", C(1, 2) - b11 - b22 - b33 - b44}});
        rep.add("eq42_trace", "R24 + R35 = 1 + 2 b11 + 4 b22 b44 + 4 b33 b55 at trace 1/2",
                traced.is_zero());

        MultiPoly D24 = C(4) * b24 * b24 - w2 * w4;
        MultiPoly R12_ = w1 * w2, R35b = w3 * w5;
        MultiPoly lhs45 = D24 * (C(4) * Y - R12_) * (C(4) * Y - R35b) -
                          w1 * w3 * w2 * w5 * D24 - C(4) * w3 * w4 * w2 * w5 * Y;
        MultiPoly rhs45 = C(4) * Y * (D24 * (C(4) * Y - R12_ - R35b) - w2 * w3 * w4 * w5);
        rep.add("eq45_pure", "the cleared b13-bound chain factors through 4 b12^2",
                identity_check(lhs45, rhs45));
        MultiPoly traced45 = (R12_ + R35b -
                              (C(1) + C(2) * b44 + C(4) * b11 * b22 + C(4) * b33 * b55))
                                 .substitute({{"b55", C(1, 2) - b11 - b22 - b33 - b44}});
        rep.add("eq45_trace", "R12 + R35 = 1 + 2 b44 + 4 b11 b22 + 4 b33 b55 at trace 1/2",
                traced45.is_zero());
    }

    return rep;
}

}  // namespace sniep5

#endif
