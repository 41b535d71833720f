#ifndef SNIEP5_PATTERN_H_HPP
#define SNIEP5_PATTERN_H_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sniep5/charpoly.hpp"
#include "sniep5/multipoly.hpp"
#include "sniep5/radical_cmp.hpp"
#include "sniep5/report.hpp"
#include "sniep5/sym_matrix.hpp"

namespace sniep5 {

/// Parameters of the trace-1/2 pattern-H matrix: diagonal
/// (1/2 - t - s, 0, t, s, 0), zero set {(1,4),(1,5),(2,3),(3,4)}.
struct HParams {
    Rational t, s, a12, a13, a24, a25, a35, a45;

    void validate() const {
        for (const Rational* v : {&t, &s, &a12, &a13, &a24, &a25, &a35, &a45})
            if (v->sign() < 0) throw std::domain_error("pattern-H parameters must be nonnegative");
        if (t + s > Rational(1, 2)) throw std::domain_error("pattern-H requires t + s <= 1/2");
    }

    /// The symbol swap of the conjugation lemma: a11 <-> a33 (so t becomes
    /// 1/2 - t - s), a12 <-> a35, a24 <-> a45; a13, s, a25 fixed.
    HParams swapped() const {
        HParams p;
        p.t = Rational(1, 2) - t - s;
        p.s = s;
        p.a12 = a35;
        p.a35 = a12;
        p.a24 = a45;
        p.a45 = a24;
        p.a13 = a13;
        p.a25 = a25;
        return p;
    }
};

inline ExactMatrix build_h(const HParams& p) {
    p.validate();
    ExactMatrix m(5);
    m.set(0, 0, Rational(1, 2) - p.t - p.s);
    m.set(2, 2, p.t);
    m.set(3, 3, p.s);
    m.set(0, 1, p.a12);
    m.set(0, 2, p.a13);
    m.set(1, 3, p.a24);
    m.set(1, 4, p.a25);
    m.set(2, 4, p.a35);
    m.set(3, 4, p.a45);
    return m;
}

/// One evaluated lemma inequality: `holds` is meaningful only when
/// `applicable` (guards such as positive denominators passed).
struct PredicateResult {
    std::string name;
    bool applicable = true;
    bool holds = false;
};

struct PredicateReport {
    std::vector<PredicateResult> entries;

    const PredicateResult* find(const std::string& name) const {
        for (const auto& e : entries)
            if (e.name == name) return &e;
        return nullptr;
    }
    void add(std::string name, bool holds, bool applicable = true) {
        entries.push_back({std::move(name), applicable, holds});
    }
};

/// Exact truth values for the section's numbered inequalities, radicals
/// compared in squared form.  Predicates whose positivity guards fail are
/// marked not applicable instead of being evaluated on a bad branch.
inline PredicateReport h_predicates(const HParams& p) {
    p.validate();
    PredicateReport rep;
    const Rational one(1), half(1, 2);
    const Rational t = p.t, s = p.s;
    const Rational a12s = p.a12 * p.a12, a13s = p.a13 * p.a13, a24s = p.a24 * p.a24,
                   a25s = p.a25 * p.a25, a35s = p.a35 * p.a35, a45s = p.a45 * p.a45;

    Rational S1 = one - s - a24s - (one - s) * a25s - a45s -
                  Rational(2) * p.a24 * p.a25 * p.a45;
    Rational S2 = Rational(-1) + Rational(2) * s + Rational(4) * a24s +
                  Rational(4) * (one - Rational(2) * s) * a25s + Rational(4) * a45s +
                  Rational(16) * p.a24 * p.a25 * p.a45;

    rep.add("S1_geq_0", S1.sign() >= 0);
    rep.add("a45_s_slack", one - s - a45s >= Rational(0));
    rep.add("lemma3_a24_small", Rational(4) * a24s <= one - Rational(2) * s);
    rep.add("lemma3_a45_small", Rational(4) * a45s <= one - Rational(2) * s);
    rep.add("lemma3_a13_small",
            Rational(2) * a13s <= (one - Rational(2) * t) * (t + s));

    {
        Rational den = one - s - a45s;
        bool app = den.sign() > 0 && S1.sign() >= 0;
        rep.add("a12_upper",
                app && Rational(2) * a12s * den <= (one + Rational(2) * t + Rational(2) * s) * S1,
                app);
    }
    {
        Rational den = one - s - a24s;
        bool app = den.sign() > 0 && S1.sign() >= 0;
        rep.add("a35_upper", app && a35s * den <= (one - t) * S1, app);
    }

    rep.add("a24_lower", Rational(4) * a24s > one - Rational(2) * s);
    rep.add("a45_lower", Rational(4) * a45s > one - Rational(2) * s);
    rep.add("a24_upper", Rational(4) * a24s < Rational(3) - Rational(2) * s);
    rep.add("a45_upper", Rational(4) * a45s < Rational(3) - Rational(2) * s);
    rep.add("a25_upper", Rational(2) * (one - s) * p.a25 < one);
    rep.add("S2_positive", S2.sign() > 0);

    {
        Rational den = Rational(4) * a45s + Rational(2) * s - one;
        bool app = den.sign() > 0 && S2.sign() >= 0;
        bool suff = app && Rational(2) * a12s * den <= (t + s) * S2;
        rep.add("a12_sufficient", suff, app);
        rep.add("a12_lower", app && !suff, app);
    }
    {
        Rational den = Rational(4) * a24s + Rational(2) * s - one;
        bool app = den.sign() > 0 && S2.sign() >= 0;
        bool suff = app && Rational(4) * a35s * den <= (one - Rational(2) * t) * S2;
        rep.add("a35_sufficient", suff, app);
        rep.add("a35_lower", app && !suff, app);
    }

    {
        // a24 < (1/2) sqrt((3-2s)(1+3t+3s - 2 sqrt(G))/(1+t+s)), G = (1+2t+2s)(t+s)
        Rational G = (one + Rational(2) * t + Rational(2) * s) * (t + s);
        Rational K = one + Rational(3) * t + Rational(3) * s -
                     Rational(4) * a24s * (one + t + s) / (Rational(3) - Rational(2) * s);
        rep.add("a24_better_upper", K.sign() > 0 && Rational(4) * G < K * K);
    }
    {
        // a45^2 > (1-s)/2 - (1/4) sqrt(R)
        Rational R = one - (one - Rational(2) * s) * (Rational(3) - Rational(2) * s) * (t + s) /
                               (one + t + s);
        rep.add("a45_better_lower",
                gt_minus_sqrt(a45s, (one - s) * half, Rational(1, 4), R));
    }
    {
        Rational H = (one - t) * (one - Rational(2) * t);
        Rational K = Rational(5) - Rational(6) * t -
                     Rational(4) * a45s * (Rational(3) - Rational(2) * t) /
                         (Rational(3) - Rational(2) * s);
        rep.add("a45_better_upper", K.sign() > 0 && Rational(16) * H < K * K);
    }
    {
        Rational R = one - (one - Rational(2) * s) * (Rational(3) - Rational(2) * s) *
                               (one - Rational(2) * t) / (Rational(3) - Rational(2) * t);
        rep.add("a24_better_lower",
                gt_minus_sqrt(a24s, (one - s) * half, Rational(1, 4), R));
    }
    rep.add("a13_lower", Rational(2) * a13s > (one - Rational(2) * t) * (t + s));

    // lambda3 <= 1/2 via the 4x4 submatrix on rows {1,2,4,5}: under the
    // a24/a45 lower bounds, P(1/2) <= 0 pins the second-largest eigenvalue.
    {
        ExactMatrix m = build_h(p);
        ExactMatrix sub = m.principal_submatrix({0, 1, 3, 4});
        Rational at_half = charpoly_exact(sub).eval(half);
        bool premises = Rational(4) * a24s > one - Rational(2) * s &&
                        Rational(4) * a45s > one - Rational(2) * s;
        rep.add("lambda3_leq_half_1245", at_half.sign() <= 0, premises);
    }
    return rep;
}

/// Dual predicate under the conjugation symbol swap; predicates built from
/// swap-invariant expressions map to themselves.
inline std::string h_dual_predicate(const std::string& name) {
    static const std::map<std::string, std::string> pairs = {
        {"lemma3_a24_small", "lemma3_a45_small"}, {"lemma3_a45_small", "lemma3_a24_small"},
        {"a12_upper", "a35_upper"},               {"a35_upper", "a12_upper"},
        {"a24_lower", "a45_lower"},               {"a45_lower", "a24_lower"},
        {"a24_upper", "a45_upper"},               {"a45_upper", "a24_upper"},
        {"a12_sufficient", "a35_sufficient"},     {"a35_sufficient", "a12_sufficient"},
        {"a12_lower", "a35_lower"},               {"a35_lower", "a12_lower"},
        {"a24_better_upper", "a45_better_upper"}, {"a45_better_upper", "a24_better_upper"},
        {"a45_better_lower", "a24_better_lower"}, {"a24_better_lower", "a45_better_lower"},
    };
    auto it = pairs.find(name);
    return it == pairs.end() ? name : it->second;
}

namespace hexpr {

inline MultiPoly V(const std::string& n) { return MultiPoly::variable(n); }
inline MultiPoly C(long n, long d = 1) { return MultiPoly::constant(Rational(n, d)); }

/// Symbolic registry for the section's named expressions; each member is the
/// printed form, and verify_h_identities proves them against the matrix.
struct HExpressions {
    MultiPoly t = V("t"), s = V("s");
    MultiPoly a12 = V("a12"), a13 = V("a13"), a24 = V("a24"), a25 = V("a25"), a35 = V("a35"),
              a45 = V("a45");
    MultiPoly x = V("x"), y = V("y");

    MultiPoly S1 = C(1) - s - a24 * a24 - (C(1) - s) * a25 * a25 - a45 * a45 -
                   C(2) * a24 * a25 * a45;
    MultiPoly S2 = C(-1) + C(2) * s + C(4) * a24 * a24 +
                   C(4) * (C(1) - C(2) * s) * a25 * a25 + C(4) * a45 * a45 +
                   C(16) * a24 * a25 * a45;

    MultiPoly C1 = C(1) + t + s;
    MultiPoly C2y = (C(1) + t + s) * (C(4) * y + C(6) * s - C(5));
    MultiPoly C3y = (C(-1) + C(2) * t + C(4) * s) * y + (C(1) - s) * (C(1) - C(2) * s) * (C(1) + t + s);
    MultiPoly f1 = C(4) * C1 * x * x + C2y * x + C3y;
    MultiPoly g1 = C(16) * C1 * y * y -
                   C(8) * (C(3) - C(2) * s) * (C(1) + C(3) * t + C(3) * s) * y +
                   (C(3) - C(2) * s) * (C(3) - C(2) * s) * C1;

    // f2(x, y, z, w) in the roles (a12, a13, a25, a35)
    MultiPoly z = V("z"), w = V("w");
    MultiPoly f2 = (C(-1) + z * z) * y * y - C(2) * x * z * w * y -
                   Rational(1, 2) * ((C(1) - t) * (C(1) + C(2) * t + C(2) * s) * z * z) -
                   Rational(1, 2) * ((t - C(1) + w * w) * (C(1) + C(2) * t + C(2) * s - C(2) * x * x));

    MultiPoly f3 = C(-4) * ((C(1) - C(2) * t) * (C(1) + t + s) * x +
                            (C(3) - C(2) * t) * (t + s) * y) *
                       (C(4) * x + C(4) * y + C(2) * s - C(1)) -
                   (C(1) - C(2) * s) *
                       (C(6) * t * t - C(3) * (C(1) - C(2) * s) * t - C(5) * s - C(1)) *
                       (C(4) * x + C(4) * y + C(2) * s - C(1)) +
                   C(4) * (C(1) + s) * (C(4) * x + C(2) * s - C(1)) * (C(4) * y + C(2) * s - C(1));

    MultiPoly C4 = C(16) * t * t - C(8) * (C(1) - C(2) * s) * t + C(3) * (C(1) - C(2) * s);
    MultiPoly C5 = C(16) * t * t * t + C(56) * t * t * s + C(40) * t * s * s + C(28) * t * t -
                   C(12) * s * s + C(12) * t * s - C(12) * t + C(9);
    MultiPoly C6 = (C(4) * t * t + C(4) * t * s + C(2) * s + C(3)) *
                   (C(4) * t * t + C(4) * t * s + C(2) * s + C(3));
    MultiPoly g2 = C(256) * (C(3) + C(2) * s) * C4 * x * x -
                   C(128) * (C(1) - C(2) * s) * C5 * x +
                   C(16) * (C(1) - C(2) * s) * (C(1) - C(2) * s) * C6;

    // Appendix expressions for the x_min and x_max comparisons.
    MultiPoly h1 = C(64) * s * s * t * t + C(64) * t * s.pow(3) - C(24) * s.pow(3) +
                   C(32) * t.pow(3) - C(16) * t * s * s + C(48) * s * t * t + C(12) * s * s -
                   C(152) * t * t - C(168) * t * s + C(78) * s + C(56) * t - C(3);
    MultiPoly h2 = C(128) * s.pow(4) * t + C(128) * t * t * s.pow(3) - C(48) * s.pow(4) -
                   C(192) * t * s.pow(3) + C(64) * s * s * t * t + C(256) * s * t.pow(3) +
                   C(64) * t.pow(4) + C(96) * s.pow(3) - C(512) * t * s * s -
                   C(736) * s * t * t - C(192) * t.pow(3) + C(232) * s * s + C(528) * t * s +
                   C(352) * t * t - C(136) * s - C(120) * t + C(1);
    MultiPoly h3 = C(-1) * (C(6) - C(8) * t) * s + C(2) * t * t - C(15) * t + C(9);
    MultiPoly h4 = C(4) * s * s - C(16) * t * s - C(2) * t * t + C(27) * t - C(9);
    MultiPoly h5 = C(44) * t * s * s + C(56) * s * t * t - C(12) * s * s + C(36) * t * t -
                   C(4) * t * s + C(6) * s - C(9) * t;
    MultiPoly h6 = (C(36) * s * s + C(44) * s + C(33)) * t * t +
                   (C(-16) * s * s + C(32) * s - C(12)) * t + C(24) * s * s - C(12) * s;
};

/// Pattern-H matrix with symbolic entries.
inline std::vector<std::vector<MultiPoly>> symbolic_h() {
    const MultiPoly z = MultiPoly();
    MultiPoly t = V("t"), s = V("s");
    return {
        {C(1, 2) - t - s, V("a12"), V("a13"), z, z},
        {V("a12"), z, z, V("a24"), V("a25")},
        {V("a13"), z, t, z, V("a35")},
        {z, V("a24"), z, s, V("a45")},
        {z, V("a25"), V("a35"), V("a45"), z},
    };
}

/// det(lambda I - M[idx]) for a symbolic matrix at a rational lambda.
inline MultiPoly symbolic_p_sub(const std::vector<std::vector<MultiPoly>>& m,
                                const std::vector<int>& idx, const Rational& lambda) {
    std::vector<std::vector<MultiPoly>> a(idx.size(), std::vector<MultiPoly>(idx.size()));
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = 0; j < idx.size(); ++j) {
            a[i][j] = MultiPoly() - m[idx[i]][idx[j]];
            if (i == j) a[i][j] = a[i][j] + MultiPoly::constant(lambda);
        }
    return poly_det(a);
}

/// True when every coefficient is >= 0: a sign certificate for positivity on
/// the nonnegative orthant of the chosen variables.
inline bool all_coeffs_nonnegative(const MultiPoly& p) {
    for (const auto& [e, c] : p.terms())
        if (c.sign() < 0) return false;
    return true;
}

}  // namespace hexpr

/// The asserted expansions of the pattern-H section, each reduced to the zero
/// polynomial exactly.
inline VerifyReport verify_h_identities() {
    using namespace hexpr;
    VerifyReport rep;
    rep.title = "identities-h";
    HExpressions E;
    auto A = symbolic_h();
    const Rational one(1), half(1, 2);

    rep.add("S1_def", "P_{A[2,4,5]}(1) equals the printed S1",
            identity_check(symbolic_p_sub(A, {1, 3, 4}, one), E.S1));
    rep.add("S2_def", "-8 P_{A[2,4,5]}(1/2) equals the printed S2",
            identity_check(Rational(-8) * symbolic_p_sub(A, {1, 3, 4}, half), E.S2));
    rep.add("eq_1", "P_{A[1,2,4,5]}(1) = (1/2)(1+2t+2s) S1 + a12^2 (a45^2 + s - 1)",
            identity_check(symbolic_p_sub(A, {0, 1, 3, 4}, one),
                           Rational(1, 2) * ((C(1) + C(2) * E.t + C(2) * E.s) * E.S1) +
                               E.a12 * E.a12 * (E.a45 * E.a45 + E.s - C(1))));
    rep.add("eq_2", "P_{A[1,2,4,5]}(1/2) = -(1/8)(t+s) S2 + (1/4) a12^2 (4 a45^2 + 2s - 1)",
            identity_check(symbolic_p_sub(A, {0, 1, 3, 4}, half),
                           Rational(-1, 8) * ((E.t + E.s) * E.S2) +
                               Rational(1, 4) * (E.a12 * E.a12 *
                                                 (C(4) * E.a45 * E.a45 + C(2) * E.s - C(1)))));
    rep.add("f2_def", "P_{A[1,2,3,5]}(1) = f2(a12, a13, a25, a35)",
            identity_check(symbolic_p_sub(A, {0, 1, 2, 4}, one),
                           E.f2.substitute({{"x", E.a12}, {"y", E.a13}, {"z", E.a25}, {"w", E.a35}})));

    // Squared bound chain <=> f1 < 0, after clearing the two positive
    // denominators.
    rep.add("f1_equivalence",
            "(1+2t+2s)(1-s-x-y)(4x+2s-1) - (t+s)(4x+4y+2s-1)(1-s-x) = -f1(x, y)",
            identity_check((C(1) + C(2) * E.t + C(2) * E.s) * (C(1) - E.s - E.x - E.y) *
                                   (C(4) * E.x + C(2) * E.s - C(1)) -
                               (E.t + E.s) * (C(4) * E.x + C(4) * E.y + C(2) * E.s - C(1)) *
                                   (C(1) - E.s - E.x),
                           MultiPoly() - E.f1));
    rep.add("g1_discriminant", "C2(y)^2 - 16 C1 C3(y) = C1 g1(y)",
            identity_check(E.C2y * E.C2y - C(16) * E.C1 * E.C3y, E.C1 * E.g1));
    rep.add("q1_surd", "(1+3t+3s)^2 - (1+t+s)^2 = 4 (1+2t+2s)(t+s)",
            identity_check((C(1) + C(3) * E.t + C(3) * E.s).pow(2) - E.C1.pow(2),
                           C(4) * (C(1) + C(2) * E.t + C(2) * E.s) * (E.t + E.s)));
    rep.add("q1_product", "16 g1|_{y^0} = (3-2s)^2 g1|_{y^2}",
            identity_check(C(16) * E.g1.coeff_of("y", 0),
                           (C(3) - C(2) * E.s).pow(2) * E.g1.coeff_of("y", 2)));

    {
        // f2 at the checkpoint values, cleared by D = 8 (4x+2s-1)(4y+2s-1),
        // equals f3.
        MultiPoly dx = C(4) * E.x + C(2) * E.s - C(1);
        MultiPoly dy = C(4) * E.y + C(2) * E.s - C(1);
        MultiPoly D = C(8) * dx * dy;
        MultiPoly blob = C(4) * E.x + C(4) * E.y + C(2) * E.s - C(1);
        MultiPoly X2D = C(4) * (E.t + E.s) * blob * dy;            // v{a12}^2 * D
        MultiPoly W2D = C(2) * (C(1) - C(2) * E.t) * blob * dx;    // v{a35}^2 * D
        MultiPoly Y2D = C(4) * (C(1) - C(2) * E.t) * (E.t + E.s) * dx * dy;  // v{a13}^2 * D
        MultiPoly XW_D = (E.t + E.s) * (C(1) - C(2) * E.t) * blob * blob;    // (xw)^2 ... * D
        MultiPoly one_p = C(1) + C(2) * E.t + C(2) * E.s;
        MultiPoly lhs = (MultiPoly() - Y2D) -
                        Rational(1, 2) * ((E.t - C(1)) * one_p * D) -
                        Rational(1, 2) * (one_p * W2D) + (E.t - C(1)) * X2D + XW_D;
        rep.add("f3_combination", "f2 at the checked substitutions, cleared, equals f3",
                identity_check(lhs, E.f3));
    }
    {
        MultiPoly A2 = E.f3.coeff_of("y", 2);
        MultiPoly B1 = E.f3.coeff_of("y", 1);
        MultiPoly C0 = E.f3.coeff_of("y", 0);
        rep.add("f3_y_lead", "f3 as a quadratic in y has lead -16 (3-2t)(t+s)",
                identity_check(A2, C(-16) * (C(3) - C(2) * E.t) * (E.t + E.s)));
        rep.add("g2_discriminant", "disc_y f3 = g2(x)",
                identity_check(B1 * B1 - C(4) * A2 * C0, E.g2));
    }
    rep.add("q2_surd", "C5^2 - (3+2s) C4 C6 = 64 (1-2t)^2 (3-2t)(1+s)(t+s)^3",
            identity_check(E.C5 * E.C5 - (C(3) + C(2) * E.s) * E.C4 * E.C6,
                           C(64) * (C(1) - C(2) * E.t).pow(2) * (C(3) - C(2) * E.t) *
                               (C(1) + E.s) * (E.t + E.s).pow(3)));
    rep.add("C4_vertex", "C4 = (4t - (1-2s))^2 + 2 (1+s)(1-2s)",
            identity_check(E.C4, (C(4) * E.t - C(1) + C(2) * E.s).pow(2) +
                                     C(2) * (C(1) + E.s) * (C(1) - C(2) * E.s)));

    {
        // Conjugation by the permutation (3, 5, 1, 4, 2).
        std::vector<int> perm = {2, 4, 0, 3, 1};
        MultiPoly t = V("t"), s = V("s");
        const MultiPoly z;
        std::vector<std::vector<MultiPoly>> expect = {
            {t, V("a35"), V("a13"), z, z},
            {V("a35"), z, z, V("a45"), V("a25")},
            {V("a13"), z, C(1, 2) - t - s, z, V("a12")},
            {z, V("a45"), z, s, V("a24")},
            {z, V("a25"), V("a12"), V("a24"), z},
        };
        bool ok = true;
        for (int i = 0; i < 5 && ok; ++i)
            for (int j = 0; j < 5 && ok; ++j)
                ok = identity_check(A[perm[i]][perm[j]], expect[i][j]);
        rep.add("conjugation_h", "P A P^-1 matches the printed matrix entrywise", ok);
    }
    {
        MultiPoly v = V("v");  // v = 1 - s
        MultiPoly dS1 = (MultiPoly() - E.S1.partial("a25"))
                            .substitute({{"s", C(1) - v}});
        MultiPoly dS2 = E.S2.partial("a25").substitute({{"s", C(1, 2) * (C(1) - V("w"))}});
        rep.add("S1_monotone_a25", "-dS1/da25 has nonnegative coefficients in (1-s)",
                hexpr::all_coeffs_nonnegative(dS1));
        rep.add("S2_monotone_a25", "dS2/da25 has nonnegative coefficients in (1-2s)",
                hexpr::all_coeffs_nonnegative(dS2));
    }
    return rep;
}

}  // namespace sniep5

#endif
