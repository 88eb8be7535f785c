#include "inertia/ecsr.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace inertia {

void EcsrMatrix::set_row(int i, const int* cols, const double* vals, std::size_t k) {
    if (k > capacity(i))
        throw std::logic_error("ecsr: capacity violation in row " + std::to_string(i) + " (" +
                               std::to_string(k) + " entries, capacity " +
                               std::to_string(capacity(i)) + ")");
    std::copy(cols, cols + k, col_.begin() + static_cast<std::ptrdiff_t>(head_[i]));
    std::copy(vals, vals + k, val_.begin() + static_cast<std::ptrdiff_t>(head_[i]));
    tail_[i] = head_[i] + k;
}

std::size_t EcsrMatrix::total_occupied() const {
    std::size_t total = 0;
    for (int i = 0; i < n_; ++i) total += row_size(i);
    return total;
}

std::size_t EcsrMatrix::max_row_size() const {
    std::size_t best = 0;
    for (int i = 0; i < n_; ++i) best = std::max(best, row_size(i));
    return best;
}

EcsrMatrix ecsr_build(const CsrMatrix& a, std::span<const int> row_capacity) {
    EcsrMatrix m;
    m.n_ = a.n;
    m.head_.assign(static_cast<std::size_t>(a.n) + 1, 0);
    m.tail_.assign(static_cast<std::size_t>(a.n), 0);
    std::size_t pool = 0;
    for (int i = 0; i < a.n; ++i) {
        m.head_[i] = pool;
        std::size_t cap = std::max<std::size_t>(
            i < static_cast<int>(row_capacity.size()) && row_capacity[i] > 0
                ? static_cast<std::size_t>(row_capacity[i])
                : 0,
            a.row_size(i));
        if (pool > SIZE_MAX - cap) throw std::overflow_error("ecsr: capacity overflow");
        pool += cap;
    }
    m.head_[a.n] = pool;
    m.val_.assign(pool, 0.0);
    m.col_.assign(pool, 0);
    for (int i = 0; i < a.n; ++i) {
        auto cols = a.row_cols(i);
        auto vals = a.row_vals(i);
        std::copy(cols.begin(), cols.end(), m.col_.begin() + static_cast<std::ptrdiff_t>(m.head_[i]));
        std::copy(vals.begin(), vals.end(), m.val_.begin() + static_cast<std::ptrdiff_t>(m.head_[i]));
        m.tail_[i] = m.head_[i] + cols.size();
    }
    return m;
}

}  // namespace inertia
