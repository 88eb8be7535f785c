#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "inertia/csr.hpp"
#include "inertia/symbolic.hpp"

namespace inertia {

/// Elimination operation used to reduce each row.
enum class Variant { elementary, givens };

const char* variant_name(Variant v);

/// Sign of a leading-principal-minor determinant.
enum class Sign : int { negative = -1, zero = 0, positive = 1 };

/// Result of one inertia-revealing factorization.
///
/// When singular_minor is set, some leading principal minor had an exactly
/// zero determinant; nu is still the count the sweep produced (a zero
/// diagonal is treated as nonnegative) but callers must not trust it.
struct InertiaReport {
    int nu = 0;                   // number of negative eigenvalues
    bool singular_minor = false;  // some |U_kk| was exactly zero
    std::int64_t interchanges = 0;
    std::int64_t flops = 0;
    std::size_t final_nnz = 0;     // occupied entries in the final factor
    std::size_t max_row_nnz = 0;   // peak row occupancy over the run
};

/// Counts the negative eigenvalues of A by reducing it row by row while
/// tracking row interchanges and diagonal sign changes.
///
/// The elementary variant eliminates the leftmost below-diagonal entry A_ij
/// of the working row by optionally swapping rows (when |A_jj| < |A_ij|,
/// strictly) and subtracting (A_ij/A_jj) times row j; an exactly-zero head is
/// skipped outright. The Givens variant annihilates A_ij with the rotation
/// [c s; -s c], c = A_jj/r, s = A_ij/r, r = hypot(A_jj, A_ij).
///
/// Flop accounting (fixed convention; meaningful for comparisons only):
/// the elementary variant charges 1 division per performed elimination plus
/// 2 flops per column of the pivot row; the Givens variant charges 5 per
/// rotation setup plus 6 per union column.
InertiaReport negative_index(const CsrMatrix& a, Variant v, const RowCounts& counts);

/// Signs of det(A_k) for k = 1..n, tracked incrementally from the running
/// diagonal product and the +-1 determinant of the accumulated transform.
std::vector<Sign> det_sign_sequence(const CsrMatrix& a, Variant v);

/// Final occupied column set of every row of the factor, exact zeros
/// included.
std::vector<std::vector<int>> structural_pattern(const CsrMatrix& a, Variant v);

/// Final factor rows as (column, value) pairs; diagnostic companion to
/// structural_pattern.
std::vector<std::vector<std::pair<int, double>>> factor_rows(const CsrMatrix& a, Variant v);

}  // namespace inertia
