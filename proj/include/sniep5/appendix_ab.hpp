#ifndef SNIEP5_APPENDIX_AB_HPP
#define SNIEP5_APPENDIX_AB_HPP

#include <string>
#include <vector>

#include "sniep5/pattern_h.hpp"
#include "sniep5/sturm.hpp"

namespace sniep5 {

namespace appendix {

/// Every printed decimal lies within 10^-9 of a root isolated at 10^-10, and
/// the printed list is complete.
inline bool printed_roots_match(const UniPoly& p, const std::vector<std::string>& printed,
                                std::string& detail, int digits = 10) {
    std::vector<Interval> roots = isolate_real_roots(p, digits);
    if (roots.size() != printed.size()) {
        detail = "expected " + std::to_string(printed.size()) + " roots, isolated " +
                 std::to_string(roots.size());
        return false;
    }
    Rational tol(mpz_class(1), mpz_class(1000000000));
    for (const auto& text : printed) {
        Rational v = Rational::parse(text);
        bool hit = false;
        for (const auto& iv : roots)
            if (v >= iv.lo - tol && v <= iv.hi + tol) hit = true;
        if (!hit) {
            detail = "printed root " + text + " not within 1e-9 of any isolated root";
            return false;
        }
    }
    return true;
}

inline UniPoly restrict_to_s(const MultiPoly& p, const MultiPoly& t_value) {
    return p.substitute({{"t", t_value}}).to_unipoly();
}
inline UniPoly restrict_to_t(const MultiPoly& p, const MultiPoly& s_value) {
    return p.substitute({{"s", s_value}}).to_unipoly();
}

}  // namespace appendix

/// Replays the x_min >= q2^- proof: the asserted expansions as exact
/// polynomial identities, the concavity/convexity facts as certified interval
/// signs, the printed root lists at 10^-10, and the final spot value.
inline VerifyReport verify_appendix_a() {
    using namespace hexpr;
    using appendix::printed_roots_match;
    VerifyReport rep;
    rep.title = "appendix-a";
    HExpressions E;
    MultiPoly t = V("t"), s = V("s");
    const Rational half(1, 2), quarter(1, 4);

    rep.add("sqrt_slack", "(1 - a/2)^2 - (1 - a) = a^2/4",
            identity_check((C(1) - C(1, 2) * V("a")).pow(2) - (C(1) - V("a")),
                           C(1, 4) * V("a") * V("a")));
    rep.add("radicand_leq_1",
            "(1+t+s) - (1-2s)(3-2s)(t+s) = (1-2t)(1-2s) + 4s(t(1-s) + s(2-s))",
            identity_check(E.C1 - (C(1) - C(2) * s) * (C(3) - C(2) * s) * (t + s),
                           (C(1) - C(2) * t) * (C(1) - C(2) * s) +
                               C(4) * s * (t * (C(1) - s) + s * (C(2) - s))));
    rep.add("h1_def", "(t+s) h1 = 2(1+t+s) C5 - (3+2s)((5-2s)(t+s)+2) C4",
            identity_check((t + s) * E.h1,
                           C(2) * E.C1 * E.C5 -
                               (C(3) + C(2) * s) * ((C(5) - C(2) * s) * (t + s) + C(2)) * E.C4));
    rep.add("d2h1_dt2", "d2 h1 / dt2 = 128 s^2 + 96 s + 192 t - 304",
            identity_check(E.h1.partial("t").partial("t"),
                           C(128) * s * s + C(96) * s + C(192) * t - C(304)));
    {
        UniPoly edge =
            appendix::restrict_to_s(E.h1.partial("t").partial("t"), C(1, 4) - C(1, 2) * V("s"));
        rep.add("h1_concave_t", "d2 h1/dt2 at t = 1/4 - s/2 is 128 s^2 - 256 < 0 on [0, 1/2]",
                edge == UniPoly({Rational(-256), Rational(0), Rational(128)}) &&
                    sign_on_interval(edge, Interval(Rational(0), half)) ==
                        IntervalSign::strictly_negative);
    }
    {
        UniPoly p = appendix::restrict_to_s(E.h1, C(0));
        std::string d;
        bool roots_ok = printed_roots_match(
            p, {"-1.591478567", "0.03825363319", "2.053224934"}, d);
        rep.add("h1_s0_roots", "roots of h1(s, 0) = -24 s^3 + 12 s^2 + 78 s - 3", roots_ok, d);
        auto iv = isolate_real_roots(p, 10);
        bool s0_small = iv.size() == 3 && iv[1].hi < Rational(1, 25);
        rep.add("s0_below_1_25", "the middle root s0 is below 1/25", s0_small);
        rep.add("h1_negative_before_s0", "h1(s, 0) < 0 for 0 <= s < s0",
                iv.size() == 3 && sign_on_interval(p, Interval(Rational(0), iv[1].lo)) ==
                                      IntervalSign::strictly_negative);
        rep.add("h1_nonneg_after_s0", "h1(s, 0) >= 0 for s0 <= s < 1/2",
                iv.size() == 3 &&
                    sign_at_least_zero(sign_on_interval(
                        p, Interval(iv[1].hi, half, true, false))));
    }
    {
        UniPoly p = appendix::restrict_to_s(E.h1, C(1, 4) - C(1, 2) * V("s"));
        UniPoly printed_form =
            ((C(-2) * (C(1) + s)) * (C(8) * s.pow(3) - C(4) * s * s - C(22) * s - C(1)))
                .to_unipoly();
        std::string d;
        bool roots_ok = printed_roots_match(
            p, {"-1.400220700", "-1", "-0.04587223942", "1.946092939"}, d);
        rep.add("h1_edge_factorization", "h1(s, 1/4 - s/2) = -2(1+s)(8s^3 - 4s^2 - 22s - 1)",
                p == printed_form);
        rep.add("h1_edge_roots", "its printed roots", roots_ok, d);
        rep.add("h1_edge_positive", "h1(s, 1/4 - s/2) > 0 on [0, 1/2)",
                sign_on_interval(p, Interval(Rational(0), half, true, false)) ==
                    IntervalSign::strictly_positive);
    }
    rep.add("d2h1_ds2", "d2 h1/ds2 = 128 t^2 - 32 t + 48 (8t - 3) s + 24",
            identity_check(E.h1.partial("s").partial("s"),
                           C(128) * t * t - C(32) * t + C(48) * (C(8) * t - C(3)) * s + C(24)));
    {
        // With 8t - 3 < 0 and s <= s0 < 1/25, the s-term is bounded below at
        // s = 1/25.
        UniPoly coef = UniPoly({Rational(-3), Rational(8)});
        bool neg = sign_on_interval(coef, Interval(Rational(0), Rational(1, 4))) ==
                   IntervalSign::strictly_negative;
        UniPoly lower = (C(128) * t * t - C(32) * t + C(48, 25) * (C(8) * t - C(3)) + C(24))
                            .to_unipoly();
        rep.add("h1_convex_s_before_s0",
                "128 t^2 - 32 t + 48(8t-3)/25 + 24 > 0 on [0, 3/8] and 8t - 3 < 0",
                neg && lower == UniPoly({Rational(456, 25), Rational(-416, 25), Rational(128)}) &&
                    sign_on_interval(lower, Interval(Rational(0), Rational(3, 8))) ==
                        IntervalSign::strictly_positive);
    }
    {
        UniPoly p = appendix::restrict_to_t(E.h1.partial("s"), C(0));
        rep.add("h1_increasing_s_at_0", "dh1/ds at s = 0 is 48 t^2 - 168 t + 78 > 0 on [0, 1/4]",
                p == UniPoly({Rational(78), Rational(-168), Rational(48)}) &&
                    sign_on_interval(p, Interval(Rational(0), quarter)) ==
                        IntervalSign::strictly_positive);
    }
    {
        UniPoly p = appendix::restrict_to_t(E.h1, C(0));
        std::string d;
        bool roots_ok = printed_roots_match(
            p, {"0.06482035236", "0.3322609755", "4.352918672"}, d);
        rep.add("h1_t0_roots", "roots of h1(0, t) = 32 t^3 - 152 t^2 + 56 t - 3", roots_ok, d);
        auto iv = isolate_real_roots(p, 10);
        rep.add("h1_negative_before_t0", "h1(0, t) < 0 for 0 <= t < t0",
                iv.size() == 3 && sign_on_interval(p, Interval(Rational(0), iv[0].lo)) ==
                                      IntervalSign::strictly_negative);
    }
    rep.add("h1_spot_value", "h1(1/100, 1/100) = -5283621/3125000",
            E.h1.eval({{"s", Rational(1, 100)}, {"t", Rational(1, 100)}}) ==
                Rational(-5283621, 3125000));

    rep.add("h2_squared_difference",
            "256 (1+t+s)^2 (1-2t)^2 (3-2t)(1+s)(t+s)^3 - (t+s)^2 h1^2 = -(3+2s)(t+s)^2 C4 h2",
            identity_check(C(256) * E.C1.pow(2) * (C(1) - C(2) * t).pow(2) *
                                   (C(3) - C(2) * t) * (C(1) + s) * (t + s).pow(3) -
                               (t + s).pow(2) * E.h1 * E.h1,
                           MultiPoly() - (C(3) + C(2) * s) * (t + s).pow(2) * E.C4 * E.h2));
    rep.add("C4_positive", "C4 = (4t - 1 + 2s)^2 + 2(1+s)(1-2s) > 0 for s < 1/2",
            identity_check(E.C4, (C(4) * t - C(1) + C(2) * s).pow(2) +
                                     C(2) * (C(1) + s) * (C(1) - C(2) * s)));
    rep.add("d2h2_dt2",
            "d2 h2/dt2 = 256 s^3 + 128 s^2 + 1536 t s + 768 t^2 - 1472 s - 1152 t + 704",
            identity_check(E.h2.partial("t").partial("t"),
                           C(256) * s.pow(3) + C(128) * s * s + C(1536) * t * s +
                               C(768) * t * t - C(1472) * s - C(1152) * t + C(704)));
    rep.add("d3h2_dt3", "d3 h2/dt3 = 1536 t + 1536 s - 1152, negative at t = 1/4 - s/2",
            identity_check(E.h2.partial("t").partial("t").partial("t"),
                           C(1536) * t + C(1536) * s - C(1152)) &&
                identity_check(E.h2.partial("t").partial("t").partial("t").substitute(
                                   {{"t", C(1, 4) - C(1, 2) * V("s")}}),
                               C(-768) * (C(1) - V("s"))));
    {
        UniPoly p = appendix::restrict_to_s(E.h2.partial("t").partial("t"),
                                            C(1, 4) - C(1, 2) * V("s"));
        std::string d;
        bool roots_ok = printed_roots_match(
            p, {"-1.333013968", "0.5332693631", "2.549744605"}, d);
        rep.add("h2_convex_t_roots",
                "roots of d2 h2/dt2 at t = 1/4 - s/2 = 256 s^3 - 448 s^2 - 704 s + 464",
                p == UniPoly({Rational(464), Rational(-704), Rational(-448), Rational(256)}) &&
                    roots_ok,
                d);
        rep.add("h2_convex_t", "that edge restriction is > 0 on [0, 1/2)",
                sign_on_interval(p, Interval(Rational(0), half, true, false)) ==
                    IntervalSign::strictly_positive);
    }
    {
        UniPoly p = appendix::restrict_to_s(E.h2, C(0));
        UniPoly printed_form = ((C(1) - C(2) * s) * (C(24) * s.pow(3) - C(36) * s * s -
                                                     C(134) * s + C(1)))
                                   .to_unipoly();
        std::string d;
        bool roots_ok = printed_roots_match(
            p, {"-1.733921023", "0.007447858016", "0.5", "3.226473165"}, d);
        rep.add("h2_s1_factorization", "h2(s, 0) = (1-2s)(24 s^3 - 36 s^2 - 134 s + 1)",
                p == printed_form);
        rep.add("h2_s1_roots", "its printed roots", roots_ok, d);
        auto iv = isolate_real_roots(p, 10);
        bool s1_small = iv.size() == 4 && iv[1].hi < Rational(1, 100);
        rep.add("s1_below_1_100", "the second smallest root s1 is below 1/100", s1_small);
        rep.add("h2_negative_after_s1", "h2(s, 0) < 0 on (s1, 1/2)",
                iv.size() == 4 &&
                    sign_on_interval(p, Interval(iv[1].hi, half, true, false)) ==
                        IntervalSign::strictly_negative);
    }
    {
        UniPoly p = appendix::restrict_to_s(E.h2, C(1, 4) - C(1, 2) * V("s"));
        UniPoly printed_form =
            (C(1, 4) * (C(1) - C(2) * s) * (C(16) * s * s + C(22) * s + C(3)) *
             (C(4) * s * s - C(8) * s - C(13)))
                .to_unipoly();
        std::string d;
        bool roots_ok = printed_roots_match(
            p, {"-1.221500234", "-1.061552813", "-0.1534997659", "0.5", "3.061552813"}, d);
        rep.add("h2_edge_factorization",
                "h2(s, 1/4 - s/2) = (1/4)(1-2s)(16 s^2 + 22 s + 3)(4 s^2 - 8 s - 13)",
                p == printed_form);
        rep.add("h2_edge_roots", "its printed roots", roots_ok, d);
        rep.add("h2_edge_negative", "h2(s, 1/4 - s/2) < 0 on [0, 1/2)",
                sign_on_interval(p, Interval(Rational(0), half, true, false)) ==
                    IntervalSign::strictly_negative);
    }
    rep.add("d2h2_ds2",
            "d2 h2/ds2 = (128 + 768 s) t^2 + (1536 s^2 - 1152 s - 1024) t - 576 s^2 + 576 s + 464",
            identity_check(E.h2.partial("s").partial("s"),
                           (C(128) + C(768) * s) * t * t +
                               (C(1536) * s * s - C(1152) * s - C(1024)) * t -
                               C(576) * s * s + C(576) * s + C(464)));
    {
        UniPoly p = appendix::restrict_to_s(
            E.h2.partial("s").partial("s").partial("t"), C(1, 4) - C(1, 2) * V("s"));
        rep.add("h2_ds2_decreasing_t",
                "dt of d2h2/ds2 at t = 1/4 - s/2 is 768 s^2 - 896 s - 960 < 0 on [0, 1/2]",
                p == UniPoly({Rational(-960), Rational(-896), Rational(768)}) &&
                    sign_on_interval(p, Interval(Rational(0), half)) ==
                        IntervalSign::strictly_negative);
        UniPoly q = appendix::restrict_to_s(E.h2.partial("s").partial("s"),
                                            C(1, 4) - C(1, 2) * V("s"));
        UniPoly printed_form =
            (C(8) * (C(3) - C(2) * s) * (C(36) * s * s + C(40) * s + C(9))).to_unipoly();
        rep.add("h2_convex_s",
                "min over t of d2h2/ds2 is 8(3-2s)(36 s^2 + 40 s + 9) > 0 on [0, 1/2)",
                q == printed_form &&
                    sign_on_interval(q, Interval(Rational(0), half, true, false)) ==
                        IntervalSign::strictly_positive);
    }
    {
        UniPoly p = appendix::restrict_to_t(E.h2, C(0));
        std::string d;
        bool roots_ok = printed_roots_match(p, {"0.008546600862", "0.4150148497"}, d);
        rep.add("h2_t1_roots", "real roots of h2(0, t) = 64 t^4 - 192 t^3 + 352 t^2 - 120 t + 1",
                p == UniPoly({Rational(1), Rational(-120), Rational(352), Rational(-192),
                              Rational(64)}) &&
                    roots_ok,
                d);
        auto iv = isolate_real_roots(p, 10);
        rep.add("t1_below_1_100", "the smaller root t1 is below 1/100",
                iv.size() == 2 && iv[0].hi < Rational(1, 100));
        rep.add("h2_negative_after_t1", "h2(0, t) < 0 on (t1, 1/4]",
                iv.size() == 2 &&
                    sign_on_interval(p, Interval(iv[0].hi, quarter)) ==
                        IntervalSign::strictly_negative);
    }
    {
        UniPoly p = E.h2.substitute({{"s", C(1, 2) - C(2) * V("t")}}).to_unipoly();
        UniPoly printed_form = (C(16) * t * (C(2) * t * t + t - C(2)) *
                                (C(32) * t * t - C(38) * t + C(9)))
                                   .to_unipoly();
        std::string d;
        bool roots_ok = printed_roots_match(
            p, {"-1.280776406", "0", "0.3267498830", "0.7807764064", "0.8607501170"}, d);
        rep.add("h2_diag_factorization", "h2(1/2 - 2t, t) = 16 t (2t^2 + t - 2)(32 t^2 - 38 t + 9)",
                p == printed_form);
        rep.add("h2_diag_roots", "its printed roots", roots_ok, d);
        rep.add("h2_diag_negative", "h2(1/2 - 2t, t) < 0 on (0, 1/4]",
                sign_on_interval(p, Interval(Rational(0), quarter, false, true)) ==
                    IntervalSign::strictly_negative);
    }
    return rep;
}

/// Replays the x_max <= q2^+ proof.
inline VerifyReport verify_appendix_b() {
    using namespace hexpr;
    VerifyReport rep;
    rep.title = "appendix-b";
    HExpressions E;
    MultiPoly t = V("t"), s = V("s");
    const Rational half(1, 2), quarter(1, 4);

    rep.add("h3_h4_squared_difference", "(3(3-2s))^2 (1-t)(1-2t) - h3^2 = -t(3-2t) h4",
            identity_check((C(3) * (C(3) - C(2) * s)).pow(2) * (C(1) - t) * (C(1) - C(2) * t) -
                               E.h3 * E.h3,
                           MultiPoly() - t * (C(3) - C(2) * t) * E.h4));
    {
        UniPoly p = E.h3.substitute({{"s", C(1, 2) - C(2) * V("t")}}).to_unipoly();
        rep.add("h3_edge", "h3(1/2 - 2t, t) = -14 t^2 + t + 6 > 0 on [0, 1/4]",
                p == UniPoly({Rational(6), Rational(1), Rational(-14)}) &&
                    sign_on_interval(p, Interval(Rational(0), quarter)) ==
                        IntervalSign::strictly_positive);
        UniPoly coef = E.h3.coeff_of("s", 1).to_unipoly();
        rep.add("h3_decreasing_s", "the s-coefficient of h3 is 8t - 6 < 0 on [0, 1/4]",
                coef == UniPoly({Rational(-6), Rational(8)}) &&
                    sign_on_interval(coef, Interval(Rational(0), quarter)) ==
                        IntervalSign::strictly_negative);
    }
    {
        MultiPoly bound = C(4) * s * s + C(27) * t - C(9);
        rep.add("h4_majorant", "(4 s^2 + 27 t - 9) - h4 = 16 t s + 2 t^2, both terms >= 0",
                identity_check(bound - E.h4, C(16) * t * s + C(2) * t * t) &&
                    hexpr::all_coeffs_nonnegative(C(16) * t * s + C(2) * t * t));
        rep.add("h4_corner", "4 s^2 + 27 t - 9 at (s, t) = (1/2, 1/4) is -5/4 < 0",
                bound.eval({{"s", half}, {"t", quarter}}) == Rational(-5, 4));
    }
    {
        UniPoly p = (t * (C(3) - C(2) * t)).to_unipoly();
        rep.add("t_3m2t_nonneg", "t(3-2t) >= 0 on [0, 1/4]",
                sign_at_least_zero(sign_on_interval(p, Interval(Rational(0), quarter))));
    }
    rep.add("h5_def", "4(t+s) h5 = (3+2s)(3+4t-2s) C4 - 3(1-2s) C5",
            identity_check(C(4) * (t + s) * E.h5,
                           (C(3) + C(2) * s) * (C(3) + C(4) * t - C(2) * s) * E.C4 -
                               C(3) * (C(1) - C(2) * s) * E.C5));
    rep.add("h5_h6_squared_difference",
            "36 (1-2t)^2 (1-2s)^2 (3-2t)(1+s)(t+s) - h5^2 = -(3+2s) C4 h6",
            identity_check(C(36) * (C(1) - C(2) * t).pow(2) * (C(1) - C(2) * s).pow(2) *
                                   (C(3) - C(2) * t) * (C(1) + s) * (t + s) -
                               E.h5 * E.h5,
                           MultiPoly() - (C(3) + C(2) * s) * E.C4 * E.h6));
    {
        UniPoly lead = E.h6.coeff_of("t", 2).to_unipoly();
        rep.add("h6_convex_t", "the t^2 coefficient 36 s^2 + 44 s + 33 is > 0 on [0, 1/2]",
                lead == UniPoly({Rational(33), Rational(44), Rational(36)}) &&
                    sign_on_interval(lead, Interval(Rational(0), half)) ==
                        IntervalSign::strictly_positive);
    }
    {
        UniPoly p = appendix::restrict_to_s(E.h6, C(0));
        rep.add("h6_at_t0", "h6(s, 0) = -12 s (1 - 2s) <= 0 on [0, 1/2)",
                identity_check(E.h6.substitute({{"t", MultiPoly()}}),
                               C(-12) * s * (C(1) - C(2) * s)) &&
                    sign_at_most_zero(
                        sign_on_interval(p, Interval(Rational(0), half, true, false))));
    }
    {
        UniPoly p = appendix::restrict_to_s(E.h6, C(1, 4) - C(1, 2) * V("s"));
        UniPoly printed_form =
            (Rational(-1, 16) * ((C(1) - C(2) * s) *
                                 (C(72) * s.pow(3) + C(116) * s * s + C(86) * s + C(15))))
                .to_unipoly();
        rep.add("h6_edge_factorization",
                "h6(s, 1/4 - s/2) = -(1/16)(1-2s)(72 s^3 + 116 s^2 + 86 s + 15)",
                p == printed_form);
        rep.add("h6_edge_negative", "that restriction is < 0 on [0, 1/2)",
                sign_on_interval(p, Interval(Rational(0), half, true, false)) ==
                    IntervalSign::strictly_negative);
        UniPoly cubic = UniPoly({Rational(15), Rational(86), Rational(116), Rational(72)});
        auto iv = isolate_real_roots(cubic, 10);
        bool all_negative = true;
        for (const auto& r : iv)
            if (r.hi >= Rational(0)) all_negative = false;
        rep.add("h6_cubic_factor_roots", "72 s^3 + 116 s^2 + 86 s + 15 has only negative roots",
                all_negative && sign_on_interval(cubic, Interval(Rational(0), half)) ==
                                    IntervalSign::strictly_positive);
    }
    return rep;
}

}  // namespace sniep5

#endif
