#include <catch2/catch_amalgamated.hpp>

#include "sniep5/appendix_d.hpp"
#include "sniep5/sampling.hpp"

using namespace sniep5;

namespace {
Rational Q(long n, long d = 1) { return Rational(n, d); }
}  // namespace

TEST_CASE("diagonal bounds per case match the tables") {
    DiagBounds c1 = derive_diag_bounds(1, {Q(0), Q(20, 100)});
    CHECK(c1.m[0] == Q(3, 40));
    CHECK(c1.M[1] == Q(1, 10));
    CHECK(c1.M[2] == Q(1, 8));
    CHECK(c1.M[3] == Q(1, 6));

    DiagBounds c3 = derive_diag_bounds(3, {Q(12, 100), Q(26, 100), Q(18, 100), Q(21, 100)});
    CHECK(c3.m[0] == Q(1, 100));
    CHECK(c3.M[4] == Q(21, 100));
    CHECK(c3.M[1] == Q(1, 15));

    DiagBounds c2 = derive_diag_bounds(2, {Q(36, 100), Q(50, 100)});
    CHECK(c2.M[1] == Q(7, 200));
    CHECK(c2.M[1] == min(Q(1, 10), min(c2.M[0], Q(1, 8) - c2.m[0] / Q(4))));

    CHECK_THROWS_AS(derive_diag_bounds(1, {Q(1, 4), Q(1, 8)}), std::domain_error);
    CHECK_THROWS_AS(derive_diag_bounds(5, {Q(0), Q(1, 8)}), std::domain_error);
    CHECK_THROWS_AS(derive_diag_bounds(3, {Q(0), Q(1, 8)}), std::domain_error);
}

TEST_CASE("worked example intermediates, exactly") {
    DiagBounds b;
    b.m = {Q(1, 100), Q(0), Q(3, 25), Q(0), Q(9, 50)};
    b.M = {Q(19, 100), Q(1, 15), Q(13, 50), Q(1, 10), Q(21, 100)};
    PipelineResult r = offdiag_lower_bounds(b, 2);

    CHECK(r.m12_sq == Q(679, 2500));
    CHECK(r.m24_sq == Q(2766, 10000));
    CHECK(r.r12 == Q(63936, 15625));
    CHECK(r.r12_tilde == Q(101, 50));
    CHECK(r.M12t_sq == Q(44526) / (Q(362) * Q(362)));
    CHECK(r.r24 == Q(5752701, 1562500));
    CHECK(r.r24_tilde == Q(191, 100));
    CHECK(r.M24t_sq == Q(204021627) / (Q(24146) * Q(24146)));

    CHECK(r.d12 == Q(13, 25));
    CHECK(r.d13 == Q(47, 100));
    CHECK(r.d24 == Q(13, 25));
    CHECK(r.d35_13 == Q(9, 20));
    CHECK(r.d35_45 == Q(9, 20));
    CHECK(r.d45 == Q(12, 25));

    apply_relations(3, r);
    CHECK(r.m35 == Q(9, 20));
    CHECK_FALSE(r.star13);  // the exact m35 comparison favours the 45 route
    CHECK(r.star45);
    CHECK_FALSE(r.pre12.has_value());
    build_bmin_and_eval(r);
    CHECK(r.p_at_1 == Q(-7419049, 156250000));
    CHECK(r.bmin.at(0, 1) == Q(13, 25));
    CHECK(r.bmin.at(2, 4) == Q(9, 20));
}

TEST_CASE("formula collapse on the all-zero box") {
    DiagBounds b;  // all zeros
    b.m.fill(Q(0));
    b.M.fill(Q(0));
    // m12^2 and m24^2 collapse to 1/4; further down the chain a denominator
    // vanishes and the failing bound is named.
    try {
        offdiag_lower_bounds(b, 2);
        FAIL("expected PipelineError");
    } catch (const PipelineError& e) {
        CHECK(std::string(e.what()).find("m13") != std::string::npos);
    }
    // The collapse itself is visible on a nearby box that stays regular.
    b.M.fill(Q(1, 1000));
    PipelineResult r = offdiag_lower_bounds(b, 2);
    CHECK(r.m12_sq == Q(1, 4));
    CHECK(r.m24_sq == Q(1, 4));
    CHECK(r.d12 == Q(1, 2));
    CHECK(r.d24 == Q(1, 2));
}

TEST_CASE("relation improvements match the parenthesized table cells") {
    PipelineResult r = run_subrange({1, 1, {Q(0), Q(20, 100)}});
    CHECK(r.d12 == Q(1, 2));
    CHECK(r.imp12 == Q(53, 100));
    REQUIRE(r.pre12.has_value());
    CHECK(*r.pre12 == Q(1, 2));
    CHECK(r.d45 == Q(49, 100));
    CHECK(r.imp45 == Q(1, 2));  // raised to m13
    CHECK(r.star13);
    CHECK_FALSE(r.star45);

    PipelineResult r34 = run_subrange({3, 4, {Q(12, 100), Q(26, 100), Q(21, 100), Q(26, 100)}});
    CHECK(r34.d45 == Q(23, 50));
    CHECK(r34.imp45 == Q(12, 25));

    // No improvement when m35 is the smaller value.
    PipelineResult r26 = run_subrange({2, 6, {Q(36, 100), Q(50, 100)}});
    CHECK_FALSE(r26.pre12.has_value());
    CHECK(r26.imp24 == r26.d24);
}

TEST_CASE("P values for the anchor sub-ranges") {
    CHECK(run_subrange({1, 1, {Q(0), Q(20, 100)}}).p_at_1 == Q(-305646963, 4000000000));
    CHECK(run_subrange({4, 7, {Q(40, 100), Q(50, 100), Q(0), Q(26, 100)}}).p_at_1 ==
          Q(-2089397, 31250000));
    CHECK(run_subrange({2, 4, {Q(24, 100), Q(28, 100)}}).p_at_1 == Q(-12411, 4000000));
}

TEST_CASE("the full replay is green and deterministic") {
    VerifyReport a = verify_appendix_d();
    INFO((a.first_failure() ? a.first_failure()->step + ": " + a.first_failure()->detail : ""));
    CHECK(a.all_pass());
    CHECK(a.steps.size() > 500);

    VerifyReport b = verify_appendix_d();
    REQUIRE(a.steps.size() == b.steps.size());
    for (size_t k = 0; k < a.steps.size(); ++k) {
        CHECK(a.steps[k].step == b.steps[k].step);
        CHECK(a.steps[k].pass == b.steps[k].pass);
        CHECK(a.steps[k].detail == b.steps[k].detail);
    }
}

TEST_CASE("mutating a table cell is detected and named") {
    auto mutated = appendix_d_expected();
    mutated[10].p += Q(1, 100);  // case 3, sub-range 3
    VerifyReport rep = verify_appendix_d(2, &mutated);
    CHECK_FALSE(rep.all_pass());
    const VerifyStep* f = rep.first_failure();
    REQUIRE(f != nullptr);
    CHECK(f->step == "case3.sub3.P_Bmin_1");
    CHECK(f->detail.find("expected") != std::string::npos);

    auto mutated2 = appendix_d_expected();
    mutated2[0].m35_13 += Q(1, 100);
    VerifyReport rep2 = verify_appendix_d(2, &mutated2);
    const VerifyStep* f2 = rep2.first_failure();
    REQUIRE(f2 != nullptr);
    CHECK(f2->step == "case1.sub1.m35_13");
}

TEST_CASE("shrinking a diagonal box never lowers the produced bounds") {
    // The principle behind the sub-range subdivision: tighter diagonal
    // knowledge gives tighter (never weaker) off-diagonal lower bounds.
    SampleRng rng(71, 0);
    int compared = 0;
    for (int k = 0; k < 400 && compared < 150; ++k) {
        long lo = static_cast<long>(rng.next_u64() % 30);
        long hi = lo + 1 + static_cast<long>(rng.next_u64() % (40 - lo));
        long lo2 = lo + static_cast<long>(rng.next_u64() % (hi - lo));
        long hi2 = lo2 + 1 + static_cast<long>(rng.next_u64() % (hi - lo2));
        if (hi2 > hi) continue;
        PipelineResult outer, inner;
        try {
            outer = run_subrange({2, 0, {Q(lo, 100), Q(hi, 100)}});
            inner = run_subrange({2, 0, {Q(lo2, 100), Q(hi2, 100)}});
        } catch (const std::exception&) {
            continue;
        }
        ++compared;
        CHECK(inner.d12 >= outer.d12);
        CHECK(inner.d24 >= outer.d24);
        CHECK(inner.d13 >= outer.d13);
        CHECK(inner.d45 >= outer.d45);
        CHECK(inner.m35 >= outer.m35);
    }
    CHECK(compared >= 100);
}

TEST_CASE("every decimal is a verified lower bound of its exact counterpart") {
    for (const auto& spec : appendix_d_subranges()) {
        PipelineResult r = run_subrange(spec);
        CHECK(verify_sqrt_bound(r.m12_sq, r.d12, BoundSide::lower));
        CHECK(verify_sqrt_bound(r.m24_sq, r.d24, BoundSide::lower));
        CHECK(verify_sqrt_bound(r.m13_sq, r.d13, BoundSide::lower));
        CHECK(verify_sqrt_bound(r.m45_sq, r.d45, BoundSide::lower));
        CHECK(verify_sqrt_bound(r.m35_13_sq, r.d35_13, BoundSide::lower));
        CHECK(verify_sqrt_bound(r.m35_45_sq, r.d35_45, BoundSide::lower));
        CHECK(verify_sqrt_bound(r.r12, r.r12_tilde, BoundSide::lower));
        CHECK(verify_sqrt_bound(r.r24, r.r24_tilde, BoundSide::lower));
    }
}

TEST_CASE("surd rendering follows the table normal forms") {
    CHECK(sqrt_surd_string(Q(44526) / (Q(362) * Q(362))) == "sqrt(44526)/362");
    CHECK(sqrt_surd_string(Q(204021627) / (Q(24146) * Q(24146))) == "sqrt(204021627)/24146");
    CHECK(sqrt_surd_string(Q(68 * 68) * Q(14867) / (Q(14867) * Q(14867))) ==
          "68*sqrt(14867)/14867");
    CHECK(sqrt_surd_string(Q(169, 484)) == "13/22");
    CHECK(sqrt_surd_string(Q(0)) == "0");
}

TEST_CASE("csv table dump is stable") {
    std::string csv = appendix_d_tables_csv();
    CHECK(csv == appendix_d_tables_csv());
    // 19 sub-ranges plus the header line.
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 20);
    CHECK(csv.find("-7419049/156250000") != std::string::npos);
}
