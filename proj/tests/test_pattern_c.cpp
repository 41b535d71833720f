#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "sniep5/appendix_c.hpp"
#include "sniep5/jacobi.hpp"
#include "sniep5/pattern_c.hpp"
#include "sniep5/sampling.hpp"

using namespace sniep5;

namespace {

CParams random_cparams(SampleRng& rng, long den = 100) {
    CParams p;
    for (;;) {
        long a = static_cast<long>(rng.next_u64() % (den / 2 + 1));
        long b = static_cast<long>(rng.next_u64() % (den / 2 + 1));
        long c = static_cast<long>(rng.next_u64() % (den / 2 + 1));
        long d = static_cast<long>(rng.next_u64() % (den / 2 + 1));
        if (a + b + c + d <= den / 2) {
            p.b11 = Rational(a, den);
            p.b22 = Rational(b, den);
            p.b33 = Rational(c, den);
            p.b44 = Rational(d, den);
            p.b55 = Rational(1, 2) - p.b11 - p.b22 - p.b33 - p.b44;
            break;
        }
    }
    auto entry = [&] { return Rational(static_cast<long>(rng.next_u64() % (den / 2)), den); };
    p.b12 = entry();
    p.b13 = entry();
    p.b24 = entry();
    p.b35 = entry();
    p.b45 = entry();
    return p;
}

}  // namespace

TEST_CASE("build_c enforces the trace and the zero pattern") {
    SampleRng rng(2, 0);
    for (int k = 0; k < 50; ++k) {
        CParams p = random_cparams(rng);
        ExactMatrix m = build_c(p);
        CHECK(m.trace() == Rational(1, 2));
        CHECK(m.at(0, 3) == Rational(0));
        CHECK(m.at(0, 4) == Rational(0));
        CHECK(m.at(1, 2) == Rational(0));
        CHECK(m.at(1, 4) == Rational(0));
        CHECK(m.at(2, 3) == Rational(0));
    }
    CParams bad;
    bad.b11 = Rational(1, 4);  // trace != 1/2
    CHECK_THROWS_AS(build_c(bad), std::domain_error);
}

TEST_CASE("degenerate diagonal flags predicates as not applicable") {
    CParams p;
    p.b11 = Rational(1, 2);
    PredicateReport rep = c_predicates(p);
    // 1 - 2 b11 = 0 makes 4 b12^2 - (1-2b11)(1-2b22) = 0: the guarded
    // sufficient/lower pair cannot be evaluated.
    const PredicateResult* r = rep.find("b45_sufficient");
    REQUIRE(r != nullptr);
    CHECK_FALSE(r->applicable);
    CHECK(rep.find("b12_sufficient")->holds);  // 0 <= 0
}

TEST_CASE("necessary conditions hold for sampled matrices with rho <= 1") {
    SampleRng rng(12, 0);
    int kept = 0;
    for (int k = 0; k < 4000 && kept < 250; ++k) {
        CParams p = random_cparams(rng);
        if (spectral_radius(to_float(build_c(p)), 1e-11) > 1.0) continue;
        ++kept;
        PredicateReport rep = c_predicates(p);
        CHECK(rep.find("b12_upper")->holds);
        if (rep.find("b45_upper")->applicable) CHECK(rep.find("b45_upper")->holds);
        CHECK(rep.find("b24_upper")->holds);
        if (rep.find("b13_upper")->applicable) CHECK(rep.find("b13_upper")->holds);
    }
    CHECK(kept >= 250);
}

TEST_CASE("the guarded implication of the b24 chain") {
    // Whenever rho(B) <= 1 and the b24 lower bound holds, the b13 sufficient
    // branch certifies lambda3 <= 1/2 or its negation feeds the next lemma;
    // either way the exact predicate and the numeric eigenvalue agree.
    SampleRng rng(13, 0);
    int tested = 0;
    for (int k = 0; k < 6000 && tested < 100; ++k) {
        CParams p = random_cparams(rng);
        FloatMatrix f = to_float(build_c(p));
        if (spectral_radius(f, 1e-11) > 1.0) continue;
        PredicateReport rep = c_predicates(p);
        const PredicateResult* suff = rep.find("b13_sufficient");
        if (!suff->applicable || !suff->holds) continue;
        ++tested;
        Spectrum sp = eigen_jacobi(f, 1e-12);
        CHECK(sp.values[2] <= 0.5 + 1e-9);
    }
    CHECK(tested > 0);
}

TEST_CASE("pattern-C theorem: rho <= 1 forces lambda3 <= 1/2") {
    int kept = 0;
    for (uint64_t idx = 0; idx < 4000; ++idx) {
        FloatMatrix m = sample_pattern_c_matrix(107, idx);
        Spectrum sp = eigen_jacobi(m, 1e-12);
        double rho = std::max(std::abs(sp.values[0]), std::abs(sp.values[4]));
        if (rho <= 1.0) {
            ++kept;
            CHECK(sp.values[2] <= 0.5 + 1e-10);
        }
    }
    CHECK(kept > 500);
}

TEST_CASE("identity suite for the pattern-C section") {
    VerifyReport rep = verify_c_identities();
    INFO((rep.first_failure() ? rep.first_failure()->step : ""));
    CHECK(rep.all_pass());
    CHECK(rep.steps.size() >= 15);
}

TEST_CASE("appendix contradiction certificates") {
    VerifyReport rep = verify_appendix_c(3000, 7);
    INFO((rep.first_failure() ? rep.first_failure()->step + ": " + rep.first_failure()->detail
                              : ""));
    CHECK(rep.all_pass());
}

TEST_CASE("h9 sampling points lie in the region") {
    for (uint64_t idx = 0; idx < 200; ++idx) {
        auto pt = sample_h9_region_point(9, idx);
        Rational sum(0);
        for (const auto& x : pt) {
            CHECK(x.sign() >= 0);
            sum += x;
        }
        CHECK(sum == Rational(1, 2));
        CHECK(pt[2] >= Rational(26, 100));
    }
}

TEST_CASE("h9 is negative away from the boundary zeros") {
    CHECK(cexpr::h9_eval(Rational(0), Rational(0), Rational(3, 10), Rational(0), Rational(1, 5))
              .sign() <= 0);
    CHECK(cexpr::h9_eval(Rational(1, 10), Rational(1, 10), Rational(26, 100), Rational(2, 100),
                         Rational(2, 100))
              .sign() <= 0);
}
