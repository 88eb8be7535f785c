#include "inertia/csr.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace inertia {

double CsrMatrix::at(int i, int j) const {
    auto cols = row_cols(i);
    auto it = std::lower_bound(cols.begin(), cols.end(), j);
    if (it == cols.end() || *it != j) return 0.0;
    return values[row_ptr[i] + static_cast<std::size_t>(it - cols.begin())];
}

CsrMatrix csr_from_triplets(int n, std::span<const Triplet> entries) {
    if (n < 0) throw std::invalid_argument("csr_from_triplets: negative dimension");
    std::map<std::pair<int, int>, double> acc;
    for (const Triplet& t : entries) {
        if (t.row < 0 || t.row >= n || t.col < 0 || t.col >= n)
            throw std::invalid_argument("csr_from_triplets: index (" + std::to_string(t.row) +
                                        "," + std::to_string(t.col) + ") out of range");
        if (!std::isfinite(t.value))
            throw std::invalid_argument("csr_from_triplets: non-finite value at (" +
                                        std::to_string(t.row) + "," + std::to_string(t.col) + ")");
        acc[{t.row, t.col}] += t.value;
    }
    // Mirror one-sided off-diagonal entries and force explicit diagonals.
    for (const auto& [pos, v] : acc) {
        auto mirror = std::make_pair(pos.second, pos.first);
        if (pos.first != pos.second && acc.find(mirror) == acc.end()) acc[mirror] = v;
    }
    for (int i = 0; i < n; ++i) acc.try_emplace({i, i}, 0.0);

    CsrMatrix a;
    a.n = n;
    a.row_ptr.assign(static_cast<std::size_t>(n) + 1, 0);
    a.col_idx.reserve(acc.size());
    a.values.reserve(acc.size());
    for (const auto& [pos, v] : acc) ++a.row_ptr[static_cast<std::size_t>(pos.first) + 1];
    for (int i = 0; i < n; ++i) a.row_ptr[i + 1] += a.row_ptr[i];
    // std::map iterates in (row, col) order, so a single pass emits sorted rows.
    for (const auto& [pos, v] : acc) {
        a.col_idx.push_back(pos.second);
        a.values.push_back(v);
    }
    return a;
}

double one_norm(const CsrMatrix& a) {
    std::vector<double> col_sum(static_cast<std::size_t>(a.n), 0.0);
    for (std::size_t p = 0; p < a.nnz(); ++p)
        col_sum[static_cast<std::size_t>(a.col_idx[p])] += std::abs(a.values[p]);
    double best = 0.0;
    for (double s : col_sum) best = std::max(best, s);
    return best;
}

CsrMatrix shifted(const CsrMatrix& a, double x) {
    CsrMatrix b = a;
    for (int i = 0; i < b.n; ++i) {
        auto cols = b.row_cols(i);
        auto it = std::lower_bound(cols.begin(), cols.end(), i);
        // The diagonal is explicit by construction.
        b.values[b.row_ptr[i] + static_cast<std::size_t>(it - cols.begin())] -= x;
    }
    return b;
}

}  // namespace inertia
