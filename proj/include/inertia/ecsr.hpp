#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "inertia/csr.hpp"

namespace inertia {

/// Expandable compressed sparse row: CSR with per-row slack so rows can grow
/// in place during the factorization. Row i occupies pool positions
/// [head[i], tail[i]); its vacant space is [tail[i], head[i+1]).
///
/// Single-owner working state; not meant to be shared across threads.
class EcsrMatrix {
public:
    EcsrMatrix() = default;

    int dim() const { return n_; }
    std::size_t row_size(int i) const { return tail_[i] - head_[i]; }
    std::size_t capacity(int i) const { return head_[i + 1] - head_[i]; }
    bool row_empty(int i) const { return tail_[i] == head_[i]; }

    std::span<const int> row_cols(int i) const { return {col_.data() + head_[i], row_size(i)}; }
    std::span<const double> row_vals(int i) const { return {val_.data() + head_[i], row_size(i)}; }

    /// Column of the leftmost entry of row i, or -1 when the row is empty.
    int leading_col(int i) const { return row_empty(i) ? -1 : col_[head_[i]]; }
    double leading_val(int i) const { return val_[head_[i]]; }

    /// Replaces row i with k entries given in strictly increasing column
    /// order. Throws std::logic_error when k exceeds the row capacity
    /// (which signals a symbolic-analysis bug).
    void set_row(int i, const int* cols, const double* vals, std::size_t k);

    std::size_t total_occupied() const;
    std::size_t max_row_size() const;

private:
    friend EcsrMatrix ecsr_build(const CsrMatrix&, std::span<const int>);

    int n_ = 0;
    std::vector<double> val_;
    std::vector<int> col_;
    std::vector<std::size_t> head_;  // length n+1, head_[n] == pool size
    std::vector<std::size_t> tail_;  // length n
};

/// Copies A into ECSR form. row_capacity[i] is raised to nnz(A row i) when
/// smaller, so the initial rows always fit.
EcsrMatrix ecsr_build(const CsrMatrix& a, std::span<const int> row_capacity);

}  // namespace inertia
