#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "inertia/eig.hpp"
#include "inertia/oracle.hpp"
#include "inertia/rng.hpp"
#include "support.hpp"

using namespace inertia;
using namespace testsupport;

TEST_CASE("eig_all on a diagonal matrix") {
    CsrMatrix a = diag_matrix({1, 2, 3});
    BisectionParams p;
    p.tau = 1e-12;
    EigResult r = eig_all(a, p);
    REQUIRE(r.values.size() == 3);
    const double bound = 2.0 * p.tau * 6.0;  // ||A||_1 = 6
    CHECK(std::abs(r.values[0] - 1.0) <= bound);
    CHECK(std::abs(r.values[1] - 2.0) <= bound);
    CHECK(std::abs(r.values[2] - 3.0) <= bound);
}

TEST_CASE("eig_all matches the closed-form tridiagonal spectrum") {
    const int n = 4;
    CsrMatrix a = tridiagonal(n, 2.0, -1.0);
    auto expected = tridiagonal_eigenvalues(n, 2.0, -1.0);
    BisectionParams p;
    EigResult r = eig_all(a, p);
    REQUIRE(r.values.size() == 4);
    const double bound = p.tau * one_norm(a);
    for (int i = 0; i < n; ++i) CHECK(std::abs(r.values[i] - expected[i]) <= 2 * bound);
}

TEST_CASE("eig_all hits the error target on a random spectrum") {
    LatmsSpec spec{64, 6, 1.0, 4242};
    LatmsMatrix m = latms_generate_full(spec);
    CsrMatrix a = to_csr(m.matrix);
    BisectionParams p;  // tau = 2^-52
    EigResult r = eig_all(a, p);
    REQUIRE(r.values.size() == 64);
    const double norm = one_norm(a);
    double worst = 0.0;
    for (int i = 0; i < 64; ++i)
        worst = std::max(worst, std::abs(r.values[i] - m.eigenvalues[i]) / norm);
    CHECK(worst <= 10 * 1.1e-16);
}

TEST_CASE("eig_in_interval") {
    CsrMatrix a = diag_matrix({5, 5, 5, 1});
    BisectionParams p;
    EigResult r = eig_in_interval(a, p, 4.5, 5.5);
    REQUIRE(r.values.size() == 3);
    for (double v : r.values) CHECK(v == doctest::Approx(5.0).epsilon(1e-12));

    CsrMatrix b = diag_matrix({5});
    EigResult empty = eig_in_interval(b, p, 1.0, 1.000001);
    CHECK(empty.values.empty());

    // the full bracket reproduces eig_all (generic matrix: no eigenvalue sits
    // exactly on the +-||A||_1 boundary of the half-open bracket)
    Rng rng(777777);
    CsrMatrix c = to_csr(random_gaussian_sym(8, rng));
    const double norm = one_norm(c);
    EigResult all = eig_all(c, p);
    EigResult full = eig_in_interval(c, p, -norm, norm);
    REQUIRE(all.values.size() == full.values.size());
    for (std::size_t i = 0; i < all.values.size(); ++i)
        CHECK(std::abs(all.values[i] - full.values[i]) <= 2 * p.tau * norm);

    CHECK_THROWS_AS(eig_in_interval(a, p, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("count_in_interval") {
    CsrMatrix a = diag_matrix({-1, 0, 1});
    CHECK(count_in_interval(a, Variant::elementary, -2, 0).count == 1);
    // nu(A - 2I) counts eigenvalues < 2 (all three); nu(A + 2I) counts < -2 (none)
    CHECK(count_in_interval(a, Variant::elementary, -2, 2).count == 3);
    CHECK(count_in_interval(a, Variant::elementary, 1.5, 1.5).count == 0);
    CHECK_THROWS_AS(count_in_interval(a, Variant::elementary, 2, 1), std::invalid_argument);
}

TEST_CASE("eig_by_ordinal") {
    CsrMatrix a = diag_matrix({10, 20, 30});
    BisectionParams p;
    p.tau = 1e-13;
    EigResult r = eig_by_ordinal(a, p, 2, 2);
    REQUIRE(r.values.size() == 1);
    CHECK(r.values[0] == doctest::Approx(20.0).epsilon(1e-10));

    EigResult all = eig_by_ordinal(a, p, 1, 3);
    EigResult ref = eig_all(a, p);
    REQUIRE(all.values.size() == 3);
    for (int i = 0; i < 3; ++i)
        CHECK(std::abs(all.values[i] - ref.values[i]) <= 2 * p.tau * one_norm(a));

    CsrMatrix dup = diag_matrix({7, 7});
    EigResult second = eig_by_ordinal(dup, p, 2, 2);
    REQUIRE(second.values.size() == 1);
    CHECK(second.values[0] == doctest::Approx(7.0).epsilon(1e-10));

    CHECK_THROWS_AS(eig_by_ordinal(a, p, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(eig_by_ordinal(a, p, 2, 4), std::invalid_argument);
}

TEST_CASE("bisection conserves counts and stays within the eval budget") {
    Rng rng(31337);
    for (int trial = 0; trial < 5; ++trial) {
        DenseSym d = random_gaussian_sym(12, rng);
        CsrMatrix a = to_csr(d);
        BisectionParams p;
        p.tau = 1e-10;
        EigResult r = eig_all(a, p);
        CHECK(static_cast<int>(r.values.size()) == 12);  // root count conserved to the leaves

        // distinct brackets x depth bound on inertia evaluations
        std::set<double> distinct(r.values.begin(), r.values.end());
        const double norm = one_norm(a);
        const double depth = std::ceil(std::log2((2 * norm) / (2 * p.tau * norm))) + 1;
        CHECK(static_cast<double>(r.inertia_evals) <=
              static_cast<double>(distinct.size()) * depth);
    }
}

TEST_CASE("variants agree to bisection accuracy") {
    Rng rng(515151);
    DenseSym d = random_gaussian_sym(16, rng);
    CsrMatrix a = to_csr(d);
    BisectionParams pe, pg;
    pe.variant = Variant::elementary;
    pg.variant = Variant::givens;
    EigResult re = eig_all(a, pe);
    EigResult rg = eig_all(a, pg);
    REQUIRE(re.values.size() == rg.values.size());
    const double bound = 2 * pe.tau * one_norm(a);
    for (std::size_t i = 0; i < re.values.size(); ++i)
        CHECK(std::abs(re.values[i] - rg.values[i]) <= bound);
}

TEST_CASE("zero matrix short-circuits") {
    CsrMatrix z = diag_matrix({0, 0, 0});
    BisectionParams p;
    EigResult r = eig_all(z, p);
    CHECK(r.values == std::vector<double>{0, 0, 0});
    CHECK(r.inertia_evals == 0);
}

TEST_CASE("parameter validation") {
    CsrMatrix a = diag_matrix({1});
    BisectionParams p;
    p.tau = 0.0;
    CHECK_THROWS_AS(eig_all(a, p), std::invalid_argument);
    p.tau = 1e-10;
    p.nudge = 0.0;
    CHECK_THROWS_AS(eig_all(a, p), std::invalid_argument);
}
