#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "sniep5/jacobi.hpp"
#include "sniep5/sampling.hpp"
#include "sniep5/solver.hpp"
#include "sniep5/text_io.hpp"

using namespace sniep5;

namespace {

SpectrumList spec(std::initializer_list<const char*> vals) {
    std::vector<Rational> v;
    for (const char* s : vals) v.push_back(Rational::parse(s));
    return SpectrumList(std::move(v));
}

double spectrum_residual(const Certificate& cert, const SpectrumList& s) {
    Spectrum sp = eigen_jacobi(cert.matrix, 1e-12);
    double worst = 0;
    for (int k = 0; k < 5; ++k)
        worst = std::max(worst, std::abs(sp.values[k] - s[k].to_double()));
    return worst;
}

SpectrumList random_feasible(SampleRng& rng) {
    for (;;) {
        std::vector<Rational> v;
        long l1 = 1 + static_cast<long>(rng.next_u64() % 1000);
        v.emplace_back(l1, 1000);
        for (int k = 0; k < 4; ++k)
            v.emplace_back(static_cast<long>(rng.next_u64() % (2 * l1 + 1)) - l1, 1000);
        SpectrumList s(std::move(v));
        if (check_conditions(s).kind == VerdictKind::realizable) return s;
    }
}

}  // namespace

TEST_CASE("check_conditions decides the three conditions exactly") {
    Verdict v = check_conditions(spec({"1", "7/10", "7/10", "-9/10", "-9/10"}));
    CHECK(v.kind == VerdictKind::not_realizable);
    REQUIRE(v.failed.has_value());
    CHECK(*v.failed == FailedCondition::lambda3);

    v = check_conditions(spec({"1", "35/100", "34/100", "-72/100", "-72/100"}));
    CHECK(v.kind == VerdictKind::out_of_region);

    v = check_conditions(spec({"4", "3", "-2", "-2", "-2"}));
    CHECK(v.kind == VerdictKind::out_of_region);

    v = check_conditions(spec({"1", "1", "1", "-1", "-1"}));
    CHECK(v.kind == VerdictKind::realizable);

    // Perron failure inside the region.
    v = check_conditions(spec({"1", "9/10", "8/10", "5/10", "-3/2"}));
    CHECK(v.kind == VerdictKind::not_realizable);
    CHECK(*v.failed == FailedCondition::perron);

    CHECK_THROWS_AS(SpectrumList({Rational(1), Rational(0)}), std::invalid_argument);
}

TEST_CASE("unsorted input is sorted with a notice") {
    SpectrumList s = spec({"-1", "1", "1", "-1", "1"});
    CHECK_FALSE(s.input_was_sorted());
    CHECK(s[0] == Rational(1));
    CHECK(s[4] == Rational(-1));
    CHECK(spec({"1", "0", "0", "0", "0"}).input_was_sorted());
}

TEST_CASE("in the region, the middle condition is never the first failure") {
    // With the values sorted and the Perron condition holding, trace >=
    // lambda1/2 already forces lambda1 + lambda3 + lambda4 >= 0.
    SampleRng rng(31, 0);
    for (int k = 0; k < 5000; ++k) {
        std::vector<Rational> v;
        for (int i = 0; i < 5; ++i)
            v.emplace_back(static_cast<long>(rng.next_u64() % 2001) - 1000, 1000);
        Verdict verdict = check_conditions(SpectrumList(std::move(v)));
        if (verdict.failed) CHECK(*verdict.failed != FailedCondition::mcdonald_neumann);
    }
}

TEST_CASE("check_conditions is scale invariant") {
    SampleRng rng(37, 0);
    for (int k = 0; k < 300; ++k) {
        std::vector<Rational> v;
        for (int i = 0; i < 5; ++i)
            v.emplace_back(static_cast<long>(rng.next_u64() % 801) - 400, 400);
        SpectrumList s(v);
        Rational c(1 + static_cast<long>(rng.next_u64() % 50),
                   1 + static_cast<long>(rng.next_u64() % 50));
        Verdict a = check_conditions(s);
        Verdict b = check_conditions(s.scaled(c));
        CHECK(a.kind == b.kind);
        CHECK(a.failed == b.failed);
    }
}

TEST_CASE("normalize rescales to trace 1/2") {
    auto [s1, scale1] = normalize(spec({"1", "0", "0", "0", "0"}));
    CHECK(scale1 == Rational(2));
    CHECK(s1[0] == Rational(1, 2));
    auto [s2, scale2] = normalize(spec({"4", "3", "-2", "-2", "-2"}));
    CHECK(scale2 == Rational(2));
    CHECK(s2[0] == Rational(2));
    CHECK(s2[1] == Rational(3, 2));
    CHECK(s2[0] > Rational(1));  // flags out-of-region after normalization

    SampleRng rng(41, 0);
    for (int k = 0; k < 200; ++k) {
        std::vector<Rational> v;
        for (int i = 0; i < 5; ++i)
            v.emplace_back(static_cast<long>(rng.next_u64() % 400) + 1, 997);
        auto [nrm, scale] = normalize(SpectrumList(v));
        CHECK(nrm.trace() == Rational(1, 2));
        CHECK(scale == Rational(2) * SpectrumList(v).trace());
    }
    CHECK_THROWS_AS(normalize(spec({"1", "-1", "0", "0", "0"})), std::domain_error);
}

TEST_CASE("glue replaces the two Perron roots") {
    FloatMatrix a1(1), b1(1);
    std::vector<double> unit{1.0};
    FloatMatrix g = glue(a1, 0.0, unit, b1, 0.0, unit, 1.0);
    CHECK(g.at(0, 1) == 1.0);
    CHECK(g.at(0, 0) == 0.0);
    Spectrum sp = eigen_jacobi(g, 1e-13);
    CHECK(std::abs(sp.values[0] - 1.0) < 1e-12);
    CHECK(std::abs(sp.values[1] + 1.0) < 1e-12);

    FloatMatrix swap2(2);
    swap2.set(0, 1, 1.0);
    double inv = 1.0 / std::sqrt(2.0);
    std::vector<double> u{inv, inv};
    Spectrum s3 = eigen_jacobi(glue(swap2, 1.0, u, b1, 0.0, unit, 1.5), 1e-13);
    CHECK(std::abs(s3.values[0] - 1.5) < 1e-12);
    CHECK(std::abs(s3.values[1] + 0.5) < 1e-12);
    CHECK(std::abs(s3.values[2] + 1.0) < 1e-12);

    Spectrum s4 = eigen_jacobi(glue(swap2, 1.0, u, swap2, 1.0, u, 2.0), 1e-13);
    CHECK(std::abs(s4.values[0] - 2.0) < 1e-12);
    CHECK(std::abs(s4.values[1] - 0.0) < 1e-12);
    CHECK(std::abs(s4.values[2] + 1.0) < 1e-12);
    CHECK(std::abs(s4.values[3] + 1.0) < 1e-12);

    CHECK_THROWS_AS(glue(swap2, 1.0, u, b1, 0.0, unit, 0.5), ConstructionError);
}

TEST_CASE("glue spectral law on random blocks") {
    SampleRng rng(53, 0);
    for (int k = 0; k < 100; ++k) {
        double mu = -(static_cast<double>(rng.next_u64() % 1000) / 1000.0);
        double alpha = -mu + static_cast<double>(rng.next_u64() % 1000) / 1000.0;
        double beta = static_cast<double>(rng.next_u64() % 1000) / 1000.0 * alpha;
        double gamma = alpha + static_cast<double>(rng.next_u64() % 1000) / 1000.0;
        FloatMatrix a(2);
        a.set(0, 0, (alpha + mu) / 2);
        a.set(1, 1, (alpha + mu) / 2);
        a.set(0, 1, (alpha - mu) / 2);
        double inv = 1.0 / std::sqrt(2.0);
        std::vector<double> u{inv, inv};
        FloatMatrix b(1);
        b.set(0, 0, beta);
        Spectrum sp = eigen_jacobi(glue(a, alpha, u, b, beta, {1.0}, gamma), 1e-12);
        std::vector<double> expect{gamma, alpha + beta - gamma, mu};
        std::sort(expect.begin(), expect.end(), std::greater<>());
        for (int i = 0; i < 3; ++i) CHECK(std::abs(sp.values[i] - expect[i]) < 1e-9);
    }
}

TEST_CASE("realize: explicit spectra") {
    Certificate c1 = realize(spec({"1", "0", "0", "0", "0"}));
    CHECK(spectrum_residual(c1, spec({"1", "0", "0", "0", "0"})) < 1e-9);

    SpectrumList s2 = spec({"1", "1", "1", "-1", "-1"});
    Certificate c2 = realize(s2);
    CHECK(c2.matrix.entrywise_nonnegative());
    CHECK(spectrum_residual(c2, s2) < 1e-9);

    SpectrumList s3 = spec({"1", "1/2", "-1/4", "-1/4", "-1/4"});
    Certificate c3 = realize(s3);
    CHECK(c3.matrix.entrywise_nonnegative());
    CHECK(spectrum_residual(c3, s3) < 1e-9);

    // Degenerate all-zero spectrum realizes as the zero matrix.
    Certificate c4 = realize(spec({"0", "0", "0", "0", "0"}));
    for (int i = 0; i < 5; ++i)
        for (int j = i; j < 5; ++j) CHECK(c4.matrix.at(i, j) == 0.0);

    // Negative-tail spectrum takes the fold branch.
    SpectrumList s5 = spec({"1", "-1/10", "-1/10", "-1/10", "-1/10"});
    CHECK(spectrum_residual(realize(s5), s5) < 1e-9);

    CHECK_THROWS_AS(realize(spec({"1", "7/10", "7/10", "-9/10", "-9/10"})),
                    std::invalid_argument);
}

TEST_CASE("realize soundness on random feasible spectra") {
    SampleRng rng(61, 0);
    for (int k = 0; k < 500; ++k) {
        SpectrumList s = random_feasible(rng);
        Certificate cert = realize(s);
        CHECK(cert.residual < 1e-8);
        bool nonneg = true;
        for (int i = 0; i < 5; ++i)
            for (int j = i; j < 5; ++j) nonneg = nonneg && cert.matrix.at(i, j) >= -1e-12;
        CHECK(nonneg);
        CHECK(spectrum_residual(cert, s) < 1e-8);
    }
}

TEST_CASE("sampler is deterministic and respects the trace") {
    auto a = sample_random(Rational(1, 2), 5, 7);
    auto b = sample_random(Rational(1, 2), 5, 7);
    REQUIRE(a.size() == 5);
    for (int k = 0; k < 5; ++k) CHECK(a[k] == b[k]);
    for (const auto& m : a) {
        double tr = 0;
        for (int i = 0; i < 5; ++i) tr += m.at(i, i);
        CHECK(std::abs(tr - 0.5) < 1e-12);
        CHECK(m.entrywise_nonnegative());
    }
    CHECK_THROWS_AS(sample_random(Rational(1, 2), 0, 7), std::invalid_argument);
}

TEST_CASE("sampled matrices with rho <= 1 satisfy the lambda3 bound") {
    int kept = 0;
    for (uint64_t idx = 0; idx < 3000; ++idx) {
        FloatMatrix m = sample_random_matrix(Rational(1, 2), 7, idx);
        Spectrum sp = eigen_jacobi(m, 1e-12);
        double rho = std::max(std::abs(sp.values[0]), std::abs(sp.values[4]));
        if (rho <= 1.0) {
            ++kept;
            CHECK(sp.values[2] <= 0.5 + 1e-12);
        }
    }
    CHECK(kept > 1000);
}

TEST_CASE("spectrum parsing") {
    SpectrumList s = parse_spectrum("1, 0.35, 0.34, -0.72, -0.72");
    CHECK(s[1] == Rational(35, 100));
    CHECK_THROWS_AS(parse_spectrum("1, 2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_spectrum("1, 2, x, 4, 5"), std::invalid_argument);
}
