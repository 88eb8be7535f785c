#pragma once

#include <vector>

#include "inertia/csr.hpp"

namespace inertia {

/// Column elimination tree of A: the elimination tree of the (no-cancellation)
/// Cholesky factor of A^T A. parent[i] > i, or -1 for roots.
struct ColEtree {
    std::vector<int> parent;
};

/// Predicted nonzero count of each row of the R factor in the no-cancellation
/// QR factorization of A. counts[i] >= 1 and counts[i] <= n - i.
struct RowCounts {
    std::vector<int> counts;
};

/// Computes the column elimination tree from A's rows without forming A^T A,
/// using path compression over the rows' column paths.
ColEtree col_etree(const CsrMatrix& a);

/// Postorder of the elimination tree (children before parents); exposed for
/// tests of the count machinery.
std::vector<int> etree_postorder(const ColEtree& t);

/// Skeleton-based column counts of the Cholesky factor of A^T A, driven by
/// A's rows (each row contributes at its leftmost column in postorder).
/// counts[i] equals the structural nnz of row i of R; the operational
/// guarantee used by the factorization is counts[i] >= the occupied length of
/// row i at every step of either variant.
RowCounts r_row_counts(const CsrMatrix& a, const ColEtree& t);

/// Per-row ECSR capacities: max(counts[i], nnz(A row i)).
std::vector<int> allocate_capacities(const CsrMatrix& a, const RowCounts& counts);

}  // namespace inertia
