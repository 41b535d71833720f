#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "sniep5/appendix_d.hpp"
#include "sniep5/charpoly.hpp"
#include "sniep5/jacobi.hpp"
#include "sniep5/sampling.hpp"
#include "sniep5/spectral.hpp"
#include "sniep5/sturm.hpp"
#include "sniep5/text_io.hpp"

using namespace sniep5;

TEST_CASE("charpoly of a diagonal matrix") {
    ExactMatrix m = ExactMatrix::diagonal({Rational(1), Rational(2), Rational(3)});
    UniPoly expect = UniPoly({Rational(-1), Rational(1)}) * UniPoly({Rational(-2), Rational(1)}) *
                     UniPoly({Rational(-3), Rational(1)});
    CHECK(charpoly_exact(m) == expect);
}

TEST_CASE("charpoly of B_min for the worked sub-range") {
    PipelineResult r = run_subrange({3, 3, {Rational(12, 100), Rational(26, 100),
                                            Rational(18, 100), Rational(21, 100)}});
    UniPoly cp = charpoly_exact(r.bmin);
    CHECK(cp.degree() == 5);
    CHECK(cp.leading() == Rational(1));
    CHECK(cp.eval(Rational(1)) == Rational(-7419049, 156250000));
    CHECK(det_exact(r.bmin) == -cp.eval(Rational(0)));
}

TEST_CASE("negative charpoly value witnesses rho > lambda") {
    PipelineResult r = run_subrange({1, 1, {Rational(0), Rational(20, 100)}});
    CHECK(negative_cp_witness(r.bmin, Rational(1)));
    CHECK_FALSE(negative_cp_witness(ExactMatrix::identity(3), Rational(2)));
    ExactMatrix swap2(2);
    swap2.set(0, 1, Rational(1));
    CHECK(negative_cp_witness(swap2, Rational(1, 2)));
}

TEST_CASE("principal submatrices") {
    ExactMatrix m = ExactMatrix::diagonal({Rational(1), Rational(2), Rational(3), Rational(4)});
    CHECK(m.principal_submatrix({0, 1, 2, 3}) == m);
    ExactMatrix sub = m.principal_submatrix({1, 3});
    CHECK(sub.at(0, 0) == Rational(2));
    CHECK(sub.at(1, 1) == Rational(4));
    CHECK_THROWS_AS(m.principal_submatrix({3, 1}), std::domain_error);
    CHECK_THROWS_AS(m.principal_submatrix({0, 9}), std::domain_error);
    CHECK_THROWS_AS(m.principal_submatrix({}), std::domain_error);
}

TEST_CASE("jacobi on the identity") {
    Spectrum s = eigen_jacobi(FloatMatrix::identity(5), 1e-12);
    for (double v : s.values) CHECK(v == 1.0);
    CHECK(s.error_radius < 1e-12);
}

TEST_CASE("jacobi cross-checks the exact characteristic polynomial") {
    for (uint64_t idx = 0; idx < 25; ++idx) {
        FloatMatrix m = sample_random_matrix(Rational(1, 2), 99, idx);
        Spectrum sp = eigen_jacobi(m, 1e-13);
        ExactMatrix em = to_exact(m);
        UniPoly cp = charpoly_exact(em);
        auto roots = isolate_real_roots(cp, 8);
        REQUIRE(roots.size() <= 5);
        // Every numeric eigenvalue sits within 1e-6 of an isolated exact root.
        for (double v : sp.values) {
            bool hit = false;
            for (const auto& iv : roots)
                if (std::abs(v - iv.midpoint().to_double()) < 1e-6) hit = true;
            CHECK(hit);
        }
        // Trace preservation.
        double tr = 0;
        for (double v : sp.values) tr += v;
        CHECK(std::abs(tr - 0.5) < 5 * 1e-13);
    }
}

TEST_CASE("jacobi requires a positive tolerance") {
    CHECK_THROWS_AS(eigen_jacobi(FloatMatrix::identity(3), 0.0), std::domain_error);
}

TEST_CASE("permutation similarity preserves the characteristic polynomial") {
    FloatMatrix f = sample_random_matrix(Rational(1, 2), 4, 0);
    ExactMatrix m = to_exact(f);
    UniPoly base = charpoly_exact(m);
    std::vector<int> perm = {0, 1, 2, 3, 4};
    int checked = 0;
    do {
        CHECK(charpoly_exact(m.permuted(perm)) == base);
        ++checked;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(checked == 120);
}

TEST_CASE("interlacing of principal submatrices") {
    int violations = 0;
    for (uint64_t idx = 0; idx < 1000; ++idx) {
        FloatMatrix m = sample_random_matrix(Rational(1, 2), 123, idx);
        Spectrum parent = eigen_jacobi(m, 1e-11);
        double rho = std::max(std::abs(parent.values[0]), std::abs(parent.values[4]));
        for (int drop = 0; drop < 5; ++drop) {
            std::vector<int> keep;
            for (int i = 0; i < 5; ++i)
                if (i != drop) keep.push_back(i);
            Spectrum child = eigen_jacobi(m.principal_submatrix(keep), 1e-11);
            if (!interlaces(parent.values, child.values, 1e-8)) ++violations;
            double crho = std::max(std::abs(child.values[0]), std::abs(child.values[3]));
            if (crho > rho + 1e-8) ++violations;
        }
    }
    CHECK(violations == 0);
}

TEST_CASE("the explicit counterexample matrix") {
    ExampleMatrixCheck chk = verify_example_matrix();
    CHECK(chk.spectrum_ok);
    CHECK(chk.max_deviation < 1e-9);
    CHECK(chk.region_violation);
    CHECK(chk.entry_squares_ok);
    CHECK(chk.charpoly_ok);
    CHECK(chk.pass());

    ExampleMatrixCheck moved = verify_example_matrix(0.01);
    CHECK_FALSE(moved.spectrum_ok);
}

TEST_CASE("matrix text round trip") {
    PipelineResult r = run_subrange({3, 3, {Rational(12, 100), Rational(26, 100),
                                            Rational(18, 100), Rational(21, 100)}});
    std::string text = matrix_text(r.bmin);
    CHECK(parse_matrix(text) == r.bmin);
    CHECK(parse_matrix("0 0.5 0 0 0  0.5 0 0 0 0  0 0 1 0 0  0 0 0 1 0  0 0 0 0 1").at(0, 1) ==
          Rational(1, 2));
    CHECK_THROWS_AS(parse_matrix("1 2 3"), std::invalid_argument);
}

TEST_CASE("matrix construction guards") {
    CHECK_THROWS_AS(ExactMatrix(0), std::domain_error);
    CHECK_THROWS_AS(ExactMatrix(6), std::domain_error);
    std::vector<std::vector<Rational>> bad = {{Rational(0), Rational(1)},
                                              {Rational(2), Rational(0)}};
    CHECK_THROWS_AS(ExactMatrix::from_rows(bad), std::domain_error);
}
