#include <catch2/catch_amalgamated.hpp>

#include "sniep5/appendix_ab.hpp"
#include "sniep5/multipoly.hpp"
#include "sniep5/pattern_h.hpp"
#include "sniep5/sampling.hpp"
#include "sniep5/sturm.hpp"
#include "sniep5/unipoly.hpp"

using namespace sniep5;

namespace {

UniPoly random_poly(SampleRng& rng, int max_deg) {
    std::vector<Rational> c;
    int deg = 1 + static_cast<int>(rng.next_u64() % static_cast<uint64_t>(max_deg));
    for (int k = 0; k <= deg; ++k)
        c.emplace_back(static_cast<long>(rng.next_u64() % 41) - 20,
                       static_cast<long>(rng.next_u64() % 7) + 1);
    if (c.back().is_zero()) c.back() = Rational(1);
    return UniPoly(std::move(c));
}

MultiPoly random_multipoly(SampleRng& rng) {
    MultiPoly p;
    const char* names[3] = {"x", "y", "z"};
    for (int t = 0; t < 5; ++t) {
        MultiPoly term = MultiPoly::constant(
            Rational(static_cast<long>(rng.next_u64() % 21) - 10, 1 + static_cast<long>(rng.next_u64() % 4)));
        for (const char* n : names)
            term = term * MultiPoly::variable(n).pow(static_cast<unsigned>(rng.next_u64() % 3));
        p = p + term;
    }
    return p;
}

}  // namespace

TEST_CASE("uni_eval") {
    UniPoly p({Rational(-1), Rational(0), Rational(1)});  // x^2 - 1
    CHECK(p.eval(Rational(1)) == Rational(0));
    UniPoly h1_0t({Rational(-3), Rational(56), Rational(-152), Rational(32)});
    CHECK(h1_0t.eval(Rational(0)) == Rational(-3));
    CHECK(h1_0t.eval(Rational(1, 100)) == Rational(-3) + Rational(56, 100) - Rational(152, 10000) +
                                              Rational(32, 1000000));
}

TEST_CASE("polynomial division and gcd") {
    UniPoly a({Rational(-1), Rational(0), Rational(1)});        // (x-1)(x+1)
    UniPoly b({Rational(-1), Rational(1)});                     // x-1
    auto [q, r] = a.divmod(b);
    CHECK(r.is_zero());
    CHECK(q == UniPoly({Rational(1), Rational(1)}));
    CHECK(UniPoly::gcd(a, b) == b.monic());
    UniPoly sq = a * a * b;
    CHECK(sq.square_free_part() == (a * b).square_free_part());
    CHECK_THROWS_AS(a.divmod(UniPoly()), std::domain_error);
}

TEST_CASE("root isolation hits rational roots exactly") {
    UniPoly p({Rational(-1), Rational(0), Rational(1)});
    auto roots = isolate_real_roots(p, 2);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].is_point());
    CHECK(roots[0].lo == Rational(-1));
    CHECK(roots[1].is_point());
    CHECK(roots[1].lo == Rational(1));
    CHECK_THROWS_AS(isolate_real_roots(UniPoly(), 2), std::domain_error);
}

TEST_CASE("root isolation matches the printed appendix values") {
    std::string detail;
    CHECK(appendix::printed_roots_match(
        UniPoly({Rational(-3), Rational(78), Rational(12), Rational(-24)}),
        {"-1.591478567", "0.03825363319", "2.053224934"}, detail));
    CHECK(appendix::printed_roots_match(
        UniPoly({Rational(-3), Rational(56), Rational(-152), Rational(32)}),
        {"0.06482035236", "0.3322609755", "4.352918672"}, detail));
}

TEST_CASE("sturm count equals isolation count on random polynomials") {
    SampleRng rng(5, 0);
    for (int k = 0; k < 200; ++k) {
        UniPoly p = random_poly(rng, 6);
        int count = count_real_roots(p);
        auto roots = isolate_real_roots(p, 4);
        CHECK(count == static_cast<int>(roots.size()));
        UniPoly sf = p.square_free_part();
        for (const auto& iv : roots) {
            CHECK(isolating_interval_brackets(sf, iv));
            CHECK(iv.width() <= Rational(1, 10000));
        }
    }
}

TEST_CASE("square-free reduction preserves the root set") {
    SampleRng rng(6, 0);
    for (int k = 0; k < 50; ++k) {
        UniPoly p = random_poly(rng, 3);
        UniPoly squared = p * p * UniPoly({Rational(1), Rational(1)});
        auto roots_full = isolate_real_roots(squared, 4);
        auto roots_sf = isolate_real_roots(squared.square_free_part(), 4);
        REQUIRE(roots_full.size() == roots_sf.size());
        // Every isolated root of the squared polynomial is a root of the
        // original set: the squared polynomial vanishes or changes sign there.
        for (const auto& iv : roots_full) CHECK(isolating_interval_brackets(squared.square_free_part(), iv));
    }
}

TEST_CASE("sign_on_interval classifications") {
    UniPoly sq({Rational(0), Rational(0), Rational(1)});  // x^2
    CHECK(sign_on_interval(sq, Interval(Rational(-1), Rational(1))) == IntervalSign::nonnegative);
    CHECK(sign_on_interval(sq, Interval(Rational(1, 2), Rational(1))) ==
          IntervalSign::strictly_positive);
    UniPoly line({Rational(0), Rational(1)});  // x
    CHECK(sign_on_interval(line, Interval(Rational(-1), Rational(1))) == IntervalSign::mixed);
    CHECK(sign_on_interval(line, Interval(Rational(0), Rational(1), false, true)) ==
          IntervalSign::strictly_positive);
    CHECK(sign_on_interval(UniPoly() - line, Interval(Rational(0), Rational(1))) ==
          IntervalSign::nonpositive);

    // h2(s, 1/4 - s/2) restricted: strictly negative on [0, 1/2).
    hexpr::HExpressions E;
    UniPoly edge = E.h2.substitute({{"t", hexpr::C(1, 4) - hexpr::C(1, 2) * hexpr::V("s")}})
                       .to_unipoly();
    CHECK(sign_on_interval(edge, Interval(Rational(0), Rational(1, 2), true, false)) ==
          IntervalSign::strictly_negative);

    // -150 (1-2z)(102 z^2 + 24 z - 13) on [26/100, 1/2]: nonpositive, zero at 1/2.
    MultiPoly z = hexpr::V("z");
    UniPoly boundary = (hexpr::C(-150) * (hexpr::C(1) - hexpr::C(2) * z) *
                        (hexpr::C(102) * z * z + hexpr::C(24) * z - hexpr::C(13)))
                           .to_unipoly();
    CHECK(sign_on_interval(boundary, Interval(Rational(26, 100), Rational(1, 2))) ==
          IntervalSign::nonpositive);
}

TEST_CASE("sign_on_interval endpoint and cluster edge cases") {
    UniPoly p = UniPoly({Rational(-1), Rational(1)}) * UniPoly({Rational(-2), Rational(1)}) *
                UniPoly({Rational(-3), Rational(1)});  // (x-1)(x-2)(x-3)
    CHECK(sign_on_interval(p, Interval(Rational(0), Rational(4))) == IntervalSign::mixed);
    CHECK(sign_on_interval(p, Interval(Rational(1), Rational(2))) == IntervalSign::nonnegative);
    CHECK(sign_on_interval(p, Interval(Rational(1), Rational(2), false, false)) ==
          IntervalSign::strictly_positive);
    CHECK(sign_on_interval(p, Interval(Rational(2), Rational(3), false, false)) ==
          IntervalSign::strictly_negative);
    CHECK(sign_on_interval(p, Interval(Rational(3), Rational(3))) == IntervalSign::nonnegative);
    CHECK(sign_on_interval(p, Interval(Rational(5, 2), Rational(5, 2))) ==
          IntervalSign::strictly_negative);

    UniPoly touching = Rational(-1) * UniPoly({Rational(-1), Rational(1)}) *
                       UniPoly({Rational(-1), Rational(1)});  // -(x-1)^2
    CHECK(sign_on_interval(touching, Interval(Rational(0), Rational(2))) ==
          IntervalSign::nonpositive);
    CHECK(sign_on_interval(touching, Interval(Rational(0), Rational(1), true, false)) ==
          IntervalSign::strictly_negative);

    // Three roots 1/1000 apart inside the window.
    Rational base(1, 3);
    UniPoly cluster = UniPoly({-base, Rational(1)}) *
                      UniPoly({-(base + Rational(1, 1000)), Rational(1)}) *
                      UniPoly({-(base + Rational(2, 1000)), Rational(1)});
    CHECK(sign_on_interval(cluster, Interval(base, base + Rational(2, 1000))) ==
          IntervalSign::mixed);

    CHECK(sign_on_interval(UniPoly({Rational(1)}), Interval(Rational(-5), Rational(5))) ==
          IntervalSign::strictly_positive);
    CHECK(count_real_roots(UniPoly({Rational(1), Rational(0), Rational(1)})) == 0);
}

TEST_CASE("multipoly arithmetic and substitution") {
    MultiPoly x = MultiPoly::variable("x"), y = MultiPoly::variable("y");
    CHECK(identity_check((x + y) * (x + y), x * x + Rational(2) * x * y + y * y));
    CHECK((x - x).is_zero());

    hexpr::HExpressions E;
    MultiPoly expect = hexpr::C(128) * E.s * E.s + hexpr::C(96) * E.s + hexpr::C(192) * E.t -
                       hexpr::C(304);
    CHECK(identity_check(E.h1.partial("t").partial("t"), expect));

    MultiPoly sub = E.h2.substitute({{"t", hexpr::C(1, 4) - hexpr::C(1, 2) * hexpr::V("s")}});
    MultiPoly printed = hexpr::C(1, 4) * (hexpr::C(1) - hexpr::C(2) * E.s) *
                        (hexpr::C(16) * E.s * E.s + hexpr::C(22) * E.s + hexpr::C(3)) *
                        (hexpr::C(4) * E.s * E.s - hexpr::C(8) * E.s - hexpr::C(13));
    CHECK(identity_check(sub, printed));

    CHECK(x.partial("w").is_zero());
    CHECK_THROWS_AS(x.substitute({{"nope", y}}), std::domain_error);
    CHECK(x.restrict("x", Rational(3)).constant_value() == Rational(3));
}

TEST_CASE("multivariate product rule on random samples") {
    SampleRng rng(77, 0);
    for (int k = 0; k < 40; ++k) {
        MultiPoly p = random_multipoly(rng), q = random_multipoly(rng);
        MultiPoly lhs = (p * q).partial("x");
        MultiPoly rhs = p * q.partial("x") + q * p.partial("x");
        CHECK(identity_check(lhs, rhs));
    }
}

TEST_CASE("polynomial text io round trip") {
    MultiPoly x = MultiPoly::variable("x"), y = MultiPoly::variable("y");
    MultiPoly p = Rational(3, 2) * x * x * y - Rational(7, 3) * y + MultiPoly::constant(Rational(1));
    std::string text = p.text();
    CHECK(text == "3/2 * x^2 * y + -7/3 * y + 1");
    CHECK(identity_check(MultiPoly::parse(text), p));
    CHECK(MultiPoly().text() == "0");

    UniPoly u({Rational(-3), Rational(56), Rational(-152), Rational(32)});
    CHECK(u.str("t") == "32*t^3 - 152*t^2 + 56*t - 3");
}
