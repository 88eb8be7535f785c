#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "inertia/csr.hpp"
#include "inertia/factor.hpp"
#include "inertia/rng.hpp"
#include "inertia/symbolic.hpp"
#include "support.hpp"

using namespace inertia;
using namespace testsupport;

TEST_CASE("col_etree of a diagonal matrix is a forest of singletons") {
    CsrMatrix a = diag_matrix({1, 2, 3, 4});
    ColEtree t = col_etree(a);
    for (int p : t.parent) CHECK(p == -1);
}

TEST_CASE("col_etree of a dense matrix is a chain") {
    Rng rng(7);
    CsrMatrix a = random_sparse_symmetric(6, 1.1, rng);  // density > 1: full
    REQUIRE(a.nnz() == 36);
    ColEtree t = col_etree(a);
    for (int i = 0; i < 5; ++i) CHECK(t.parent[i] == i + 1);
    CHECK(t.parent[5] == -1);
}

TEST_CASE("col_etree matches the brute-force etree of chol(A^T A)") {
    Rng rng(123);
    for (int trial = 0; trial < 40; ++trial) {
        CsrMatrix a = random_sparse_symmetric(8, 0.3, rng);
        ColEtree t = col_etree(a);
        auto brute = brute_symbolic_cholesky(brute_ata_pattern(a));
        CHECK(t.parent == brute.parent);
    }
}

TEST_CASE("r_row_counts on dense and diagonal patterns") {
    Rng rng(9);
    CsrMatrix dense = random_sparse_symmetric(4, 1.1, rng);
    RowCounts counts = r_row_counts(dense, col_etree(dense));
    CHECK(counts.counts == std::vector<int>{4, 3, 2, 1});

    CsrMatrix d = diag_matrix({1, 1, 1});
    RowCounts dc = r_row_counts(d, col_etree(d));
    CHECK(dc.counts == std::vector<int>{1, 1, 1});
}

TEST_CASE("r_row_counts equals the brute-force symbolic QR row counts") {
    Rng rng(20240311);
    for (int trial = 0; trial < 40; ++trial) {
        CsrMatrix a = random_sparse_symmetric(10, 0.3, rng);
        RowCounts counts = r_row_counts(a, col_etree(a));
        auto qr = brute_symbolic_qr(a);
        for (int i = 0; i < a.n; ++i) {
            CHECK(counts.counts[i] == static_cast<int>(qr[i].size()));
            CHECK(counts.counts[i] >= 1);
            CHECK(counts.counts[i] <= a.n - i);
        }
    }
}

TEST_CASE("allocate_capacities takes the max of prediction and row nnz") {
    CsrMatrix a = csr_from_triplets(1, std::vector<Triplet>{{0, 0, 1.0}});
    SUBCASE("prediction smaller than the row") {
        CsrMatrix m = csr_from_triplets(
            3, std::vector<Triplet>{{0, 1, 1.0}, {0, 2, 1.0}});
        RowCounts fake{{2, 1, 1}};
        auto cap = allocate_capacities(m, fake);
        CHECK(cap[0] == 3);  // row 0 holds 3 entries
    }
    SUBCASE("prediction larger") {
        RowCounts fake{{4}};
        auto cap = allocate_capacities(a, fake);
        CHECK(cap == std::vector<int>{4});
    }
    SUBCASE("equal") {
        RowCounts fake{{1}};
        CHECK(allocate_capacities(a, fake) == std::vector<int>{1});
    }
}

TEST_CASE("capacities from allocate_capacities survive both variants") {
    // Operational fill bound: completing either variant with predicted
    // capacities must never trip an ECSR capacity check, and the predicted
    // counts bound the realized Givens rows.
    Rng rng(424242);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 8 + static_cast<int>(rng.next() % 40);
        CsrMatrix a = random_sparse_symmetric(n, 0.15, rng);
        RowCounts counts = r_row_counts(a, col_etree(a));
        CHECK_NOTHROW(negative_index(a, Variant::elementary, counts));
        CHECK_NOTHROW(negative_index(a, Variant::givens, counts));
        auto givens_rows = structural_pattern(a, Variant::givens);
        for (int i = 0; i < n; ++i)
            CHECK(static_cast<int>(givens_rows[i].size()) <= counts.counts[i]);
    }
}
