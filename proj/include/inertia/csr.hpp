#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace inertia {

/// One (row, col, value) input entry for building a sparse matrix.
struct Triplet {
    int row;
    int col;
    double value;
};

/// Immutable compressed-sparse-row symmetric matrix.
///
/// The full pattern is stored (both triangles), the pattern is structurally
/// symmetric, column indices strictly increase within each row, and every
/// diagonal position (i,i) is present explicitly (explicit zeros allowed).
/// Construction through csr_from_triplets or the Matrix Market reader
/// establishes these invariants; the factorization relies on them.
struct CsrMatrix {
    int n = 0;
    std::vector<std::size_t> row_ptr;  // length n+1, row_ptr[0] == 0
    std::vector<int> col_idx;          // 0-based, strictly increasing per row
    std::vector<double> values;

    std::size_t nnz() const { return col_idx.size(); }
    std::size_t row_size(int i) const { return row_ptr[i + 1] - row_ptr[i]; }
    std::span<const int> row_cols(int i) const {
        return {col_idx.data() + row_ptr[i], row_size(i)};
    }
    std::span<const double> row_vals(int i) const {
        return {values.data() + row_ptr[i], row_size(i)};
    }
    /// Value at (i,j), or 0 when the position is not stored.
    double at(int i, int j) const;
    /// Diagonal value; the diagonal slot is always stored.
    double diagonal(int i) const { return at(i, i); }
};

/// Builds a CsrMatrix from triplets. Duplicates are summed, the pattern is
/// symmetrized by union with its transpose (a one-sided off-diagonal entry is
/// mirrored with the same value), and missing diagonal positions are inserted
/// with value 0. Throws std::invalid_argument on out-of-range indices or
/// non-finite values.
CsrMatrix csr_from_triplets(int n, std::span<const Triplet> entries);

/// Matrix 1-norm: max over columns of the sum of absolute values.
double one_norm(const CsrMatrix& a);

/// Returns A - x*I. The pattern is unchanged (the diagonal is explicit).
CsrMatrix shifted(const CsrMatrix& a, double x);

}  // namespace inertia
