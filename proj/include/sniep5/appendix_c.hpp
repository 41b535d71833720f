#ifndef SNIEP5_APPENDIX_C_HPP
#define SNIEP5_APPENDIX_C_HPP

#include <string>
#include <vector>

#include "sniep5/appendix_ab.hpp"
#include "sniep5/pattern_c.hpp"
#include "sniep5/sampling.hpp"
#include "sniep5/sturm.hpp"

namespace sniep5 {

namespace cexpr {

/// h9 over the simplex slice F = {x >= 0, x3 >= 26/100, sum = 1/2}, in the
/// diagonal variables (x, y, z, u, v) = (b11, b22, b33, b44, b55).
inline MultiPoly h9_poly() {
    MultiPoly x = V("x"), y = V("y"), z = V("z"), u = V("u"), v = V("v");
    return C(625) * (C(3) - C(2) * x - C(2) * y) * (C(3) - C(2) * u - C(2) * v) -
           ((C(1) - C(2) * y) * (C(1) - C(2) * u) + (C(1) - C(2) * z) * (C(1) - C(2) * v)) *
               (C(5625) - C(7650) * x - C(7650) * v + C(11084) * x * v);
}

inline Rational h9_eval(const Rational& x, const Rational& y, const Rational& z,
                        const Rational& u, const Rational& v) {
    static const MultiPoly h9 = h9_poly();
    return h9.eval({{"x", x}, {"y", y}, {"z", z}, {"u", u}, {"v", v}});
}

}  // namespace cexpr

/// Random rational point of F (x3 >= 26/100, entries >= 0, sum 1/2).
inline std::vector<Rational> sample_h9_region_point(uint64_t seed, uint64_t index) {
    SampleRng rng(seed, index);
    // z = 26/100 + k/10^4 with k in [0, 2400]; the rest of the mass splits
    // over the other four coordinates with random rational weights.
    Rational z = Rational(26, 100) + Rational(static_cast<long>(rng.next_u64() % 2401), 10000);
    Rational rest = Rational(1, 2) - z;
    long w[4];
    long total = 0;
    for (long& wi : w) {
        wi = static_cast<long>(rng.next_u64() % 10000);
        total += wi;
    }
    std::vector<Rational> out(5);
    out[2] = z;
    if (total == 0) {
        out[0] = rest;
        return out;
    }
    Rational used(0);
    for (int k = 0; k < 3; ++k) {
        Rational xi = rest * Rational(w[k], total);
        out[k < 2 ? k : 3] = xi;
        used += xi;
    }
    out[4] = rest - used;
    return out;
}

/// h9 <= 0 at `count` random rational points of F; exact evaluation.
inline bool h9_nonpositive_sampled(int count, uint64_t seed, std::string* fail_detail = nullptr) {
    const MultiPoly h9 = cexpr::h9_poly();
    for (int k = 0; k < count; ++k) {
        auto pt = sample_h9_region_point(seed, static_cast<uint64_t>(k));
        Rational v = h9.eval(
            {{"x", pt[0]}, {"y", pt[1]}, {"z", pt[2]}, {"u", pt[3]}, {"v", pt[4]}});
        if (v.sign() > 0) {
            if (fail_detail)
                *fail_detail = "h9 > 0 at (" + pt[0].str() + ", " + pt[1].str() + ", " +
                               pt[2].str() + ", " + pt[3].str() + ", " + pt[4].str() + ")";
            return false;
        }
    }
    return true;
}

/// Replays the b33 >= 26/100 (and, by the symbol swap, b55 >= 26/100)
/// contradiction: the improved lower and upper bounds on b24 cannot coexist.
inline VerifyReport verify_appendix_c(int sample_count = 0, uint64_t seed = 20260810) {
    using namespace cexpr;
    VerifyReport rep;
    rep.title = "appendix-c";
    MultiPoly x = V("x"), y = V("y"), z = V("z"), u = V("u"), v = V("v");
    const Rational half(1, 2);

    {
        MultiPoly diff = (C(1) - x) * (C(1) - C(2) * x) - (C(1) - C(39, 25) * x).pow(2);
        rep.add("sqrt_linear_bound", "(1-x)(1-2x) - (1 - 39x/25)^2 = x(75 - 271x)/625",
                identity_check(diff, C(1, 625) * x * (C(75) - C(271) * x)));
        UniPoly q = (C(1, 625) * x * (C(75) - C(271) * x)).to_unipoly();
        rep.add("sqrt_linear_bound_sign", "that difference is >= 0 on [0, 1/4]",
                sign_at_least_zero(sign_on_interval(q, Interval(Rational(0), Rational(1, 4)))));
    }
    {
        MultiPoly den = C(5625) - C(7650) * x - C(7650) * v + C(11084) * x * v;
        rep.add("h7_denominator",
                "4(1-x)(1-v) + (1-2x)(1-2v) + 4(1-39x/25)(1-39v/25) = den/625",
                identity_check(C(4) * (C(1) - x) * (C(1) - v) +
                                   (C(1) - C(2) * x) * (C(1) - C(2) * v) +
                                   C(4) * (C(1) - C(39, 25) * x) * (C(1) - C(39, 25) * v),
                               C(1, 625) * den));
        // Bilinear in (x, v): its minimum over the [0, 24/100]^2 box sits at a
        // corner.
        bool corners = true;
        for (const Rational& xv : {Rational(0), Rational(24, 100)})
            for (const Rational& vv : {Rational(0), Rational(24, 100)})
                corners = corners && den.eval({{"x", xv}, {"v", vv}}).sign() > 0;
        rep.add("h7_denominator_positive", "positive at every corner of [0, 24/100]^2", corners);
    }
    {
        MultiPoly h8 = C(1, 4) * ((C(1) - C(2) * y) * (C(1) - C(2) * u) +
                                  (C(1) - C(2) * z) * (C(1) - C(2) * v));
        MultiPoly den = C(5625) - C(7650) * x - C(7650) * v + C(11084) * x * v;
        MultiPoly h7num = C(625) * (C(3) - C(2) * x - C(2) * y) * (C(3) - C(2) * u - C(2) * v);
        rep.add("h9_def", "h9 = h7 numerator - 4 h8 den",
                identity_check(h9_poly(), h7num - C(4) * h8 * den));
        MultiPoly h8_traced = (h8 - C(1, 4) * (C(1) + C(2) * x + C(4) * y * u + C(4) * z * v))
                                  .substitute({{"v", C(1, 2) - x - y - z - u}});
        rep.add("h8_trace_form", "4 h8 = 1 + 2x + 4yu + 4zv on the trace-1/2 slice",
                h8_traced.is_zero());
    }

    MultiPoly h9 = h9_poly();
    MultiPoly h9s = h9.substitute({{"v", C(1, 2) - x - y - z - u}});
    rep.add("d2x_h9",
            "d2/dx2 h9 on the slice = 17168 + 133008(1-2z)x + 88672 yu + 22168(4z-1)(1-2(y+z+u))",
            identity_check(h9s.partial("x").partial("x"),
                           C(17168) + C(133008) * (C(1) - C(2) * z) * x + C(88672) * y * u +
                               C(22168) * (C(4) * z - C(1)) *
                                   (C(1) - C(2) * (y + z + u))));
    rep.add("d2x_h9_corner", "its bound 17168 at z = 26/100, y + z + u = 1/2, x = y = u = 0",
            (C(17168) + C(22168) * (C(4) * V("z") - C(1)) * (C(1) - C(2) * V("w")))
                    .eval({{"z", Rational(26, 100)}, {"w", half}}) == Rational(17168));
    rep.add("d2u_h9", "d2/du2 h9 on the slice = 272 (225 - 326 x)(z - y)",
            identity_check(h9s.partial("u").partial("u"),
                           C(272) * (C(225) - C(326) * x) * (z - y)));
    rep.add("d2u_h9_corner", "272 (225 - 326 (24/100)) (26/100 - 24/100) = 498984/625",
            Rational(272) * (Rational(225) - Rational(326) * Rational(24, 100)) *
                    Rational(2, 100) ==
                Rational(498984, 625));
    {
        MultiPoly face = h9.substitute({{"x", C(1, 2) - y - z - u}, {"v", MultiPoly()}});
        rep.add("d2u_h9_v0_face", "d2/du2 h9(1/2-y-z-u, y, z, u, 0) = 400 (64 - 153 y)",
                identity_check(face.partial("u").partial("u"), C(400) * (C(64) - C(153) * y)));
        rep.add("d2u_h9_v0_corner", "400 (64 - 153 (24/100)) = 10912",
                Rational(400) * (Rational(64) - Rational(153) * Rational(24, 100)) ==
                    Rational(10912));
    }
    {
        MultiPoly face = h9s.substitute({{"x", MultiPoly()}, {"u", MultiPoly()}});
        rep.add("d2y_h9_x0u0", "d2/dy2 h9(0, y, z, 0, 1/2-y-z) = 200 (306 z - 25)",
                identity_check(face.partial("y").partial("y"), C(200) * (C(306) * z - C(25))));
        rep.add("d2y_h9_x0u0_corner", "200 (306 (26/100) - 25) = 10912",
                Rational(200) * (Rational(306) * Rational(26, 100) - Rational(25)) ==
                    Rational(10912));
        MultiPoly fx = h9.substitute({{"x", C(1, 2) - y - z}, {"u", MultiPoly()}, {"v", MultiPoly()}});
        rep.add("d2y_h9_xface", "d2/dy2 h9(1/2-y-z, y, z, 0, 0) = 30600",
                identity_check(fx.partial("y").partial("y"), C(30600)));
        MultiPoly fu = h9.substitute({{"x", MultiPoly()}, {"u", C(1, 2) - y - z}, {"v", MultiPoly()}});
        rep.add("d2y_h9_uface", "d2/dy2 h9(0, y, z, 1/2-y-z, 0) = 40000",
                identity_check(fu.partial("y").partial("y"), C(40000)));
    }

    const Interval z_range(Rational(26, 100), half);
    {
        MultiPoly line = h9.substitute(
            {{"x", MultiPoly()}, {"y", MultiPoly()}, {"u", MultiPoly()}, {"v", C(1, 2) - z}});
        MultiPoly printed = C(-150) * (C(1) - C(2) * z) * (C(102) * z * z + C(24) * z - C(13));
        rep.add("h9_line_xu0", "h9(0, 0, z, 0, 1/2-z) = -150 (1-2z)(102 z^2 + 24 z - 13)",
                identity_check(line, printed));
        std::string d;
        bool roots_ok = appendix::printed_roots_match(
            UniPoly({Rational(-13), Rational(24), Rational(102)}),
            {"-0.4935350885", "0.2582409708"}, d);
        rep.add("h9_line_xu0_roots", "102 z^2 + 24 z - 13 has the printed roots", roots_ok, d);
        rep.add("h9_line_xu0_sign", "that line is <= 0 on [26/100, 1/2]",
                sign_at_most_zero(sign_on_interval(line.to_unipoly(), z_range)));
    }
    {
        MultiPoly line = h9.substitute(
            {{"x", MultiPoly()}, {"y", C(1, 2) - z}, {"u", MultiPoly()}, {"v", MultiPoly()}});
        rep.add("h9_line_y_rest", "h9(0, 1/2-z, z, 0, 0) = -1875 (1-2z) <= 0 on [26/100, 1/2]",
                identity_check(line, C(-1875) * (C(1) - C(2) * z)) &&
                    sign_at_most_zero(sign_on_interval(line.to_unipoly(), z_range)));
    }
    {
        MultiPoly line = h9.substitute(
            {{"x", C(1, 2) - z}, {"y", MultiPoly()}, {"u", MultiPoly()}, {"v", MultiPoly()}});
        MultiPoly printed = C(150) * (C(1) - C(2) * z) * (C(1) - C(51) * z);
        rep.add("h9_line_x_rest", "h9(1/2-z, 0, z, 0, 0) = 150 (1-2z)(1-51z)",
                identity_check(line, printed));
        rep.add("h9_line_x_rest_sign", "<= 0 on [26/100, 1/2], using 1/51 < 26/100",
                Rational(1, 51) < Rational(26, 100) &&
                    sign_at_most_zero(sign_on_interval(line.to_unipoly(), z_range)));
    }
    {
        MultiPoly line = h9.substitute(
            {{"x", MultiPoly()}, {"y", MultiPoly()}, {"u", C(1, 2) - z}, {"v", MultiPoly()}});
        rep.add("h9_line_u_rest", "h9(0, 0, z, 1/2-z, 0) = -1875 (1-2z) <= 0 on [26/100, 1/2]",
                identity_check(line, C(-1875) * (C(1) - C(2) * z)) &&
                    sign_at_most_zero(sign_on_interval(line.to_unipoly(), z_range)));
    }
    {
        // The b12 variant arises by the formal swap x<->u, z<->v.
        MultiPoly swapped = h9.substitute({{"x", u}, {"z", v}, {"u", x}, {"v", z}});
        MultiPoly variant =
            C(625) * (C(3) - C(2) * u - C(2) * y) * (C(3) - C(2) * x - C(2) * z) -
            ((C(1) - C(2) * y) * (C(1) - C(2) * x) + (C(1) - C(2) * v) * (C(1) - C(2) * z)) *
                (C(5625) - C(7650) * u - C(7650) * z + C(11084) * u * z);
        rep.add("h9_symbol_swap", "the symbol swap turns h9 into the b12-variant inequality",
                identity_check(swapped, variant));
        // The swap maps the improved b12 bounds onto the improved b24 bounds.
        MultiPoly lower12 = C(1, 4) * (C(1) + C(2) * V("b44") + C(4) * V("b11") * V("b22") +
                                       C(4) * V("b33") * V("b55"));
        MultiPoly lower24 = C(1, 4) * (C(1) + C(2) * V("b11") + C(4) * V("b22") * V("b44") +
                                       C(4) * V("b33") * V("b55"));
        std::map<std::string, MultiPoly> sw = {
            {"b44", V("b11")}, {"b11", V("b44")}, {"b33", V("b55")}, {"b55", V("b33")}};
        rep.add("swap_maps_lower_bounds", "the swap exchanges the two improved lower bounds",
                identity_check(lower12.substitute(sw), lower24) &&
                    identity_check(lower24.substitute(sw), lower12));
    }

    if (sample_count > 0) {
        std::string detail;
        bool ok = h9_nonpositive_sampled(sample_count, seed, &detail);
        rep.add("h9_region_sampling",
                "h9 <= 0 at " + std::to_string(sample_count) + " random rational points of F", ok,
                detail);
    }
    return rep;
}

}  // namespace sniep5

#endif
