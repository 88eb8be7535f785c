#include "inertia/ospa.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace inertia {

Ospa::Ospa(int n)
    : values_(static_cast<std::size_t>(n), 0.0), occupied_(static_cast<std::size_t>(n), 0) {}

void Ospa::load(const EcsrMatrix& m, int i) {
    if (!empty()) throw std::logic_error("ospa: load into non-empty accumulator");
    auto cols = m.row_cols(i);
    auto vals = m.row_vals(i);
    heap_.assign(cols.begin(), cols.end());  // sorted row: already a valid min-heap
    for (std::size_t p = 0; p < cols.size(); ++p) {
        values_[static_cast<std::size_t>(cols[p])] = vals[p];
        occupied_[static_cast<std::size_t>(cols[p])] = 1;
    }
}

std::optional<Ospa::Head> Ospa::retrieve_head() const {
    if (heap_.empty()) return std::nullopt;
    int c = heap_.front();
    return Head{c, values_[static_cast<std::size_t>(c)]};
}

void Ospa::remove_head() {
    if (heap_.empty()) throw std::logic_error("ospa: remove_head on empty accumulator");
    int c = heap_.front();
    std::pop_heap(heap_.begin(), heap_.end(), std::greater<>{});
    heap_.pop_back();
    values_[static_cast<std::size_t>(c)] = 0.0;
    occupied_[static_cast<std::size_t>(c)] = 0;
}

void Ospa::heap_push(int c) {
    heap_.push_back(c);
    std::push_heap(heap_.begin(), heap_.end(), std::greater<>{});
}

void Ospa::subtract(const EcsrMatrix& m, int j, double factor) {
    if (factor == 0.0) return;
    auto cols = m.row_cols(j);
    auto vals = m.row_vals(j);
    for (std::size_t p = 0; p < cols.size(); ++p) {
        auto c = static_cast<std::size_t>(cols[p]);
        if (occupied_[c]) {
            values_[c] -= factor * vals[p];
        } else {
            occupied_[c] = 1;
            values_[c] = -(factor * vals[p]);
            heap_push(cols[p]);
        }
    }
}

std::vector<int> Ospa::sorted_cols() const {
    std::vector<int> cols = heap_;
    std::sort(cols.begin(), cols.end());
    return cols;
}

void Ospa::write_row(EcsrMatrix& m, int i, const std::vector<int>& cols) {
    std::vector<double> vals(cols.size());
    for (std::size_t p = 0; p < cols.size(); ++p)
        vals[p] = values_[static_cast<std::size_t>(cols[p])];
    m.set_row(i, cols.data(), vals.data(), cols.size());
}

void Ospa::swap_row(EcsrMatrix& m, int j) {
    std::vector<int> old_cols(m.row_cols(j).begin(), m.row_cols(j).end());
    std::vector<double> old_vals(m.row_vals(j).begin(), m.row_vals(j).end());

    std::vector<int> mine = sorted_cols();
    write_row(m, j, mine);  // throws before any state change on capacity violation
    for (int c : mine) {
        values_[static_cast<std::size_t>(c)] = 0.0;
        occupied_[static_cast<std::size_t>(c)] = 0;
    }
    heap_.assign(old_cols.begin(), old_cols.end());
    for (std::size_t p = 0; p < old_cols.size(); ++p) {
        values_[static_cast<std::size_t>(old_cols[p])] = old_vals[p];
        occupied_[static_cast<std::size_t>(old_cols[p])] = 1;
    }
}

void Ospa::store(EcsrMatrix& m, int i) {
    std::vector<int> mine = sorted_cols();
    write_row(m, i, mine);
    for (int c : mine) {
        values_[static_cast<std::size_t>(c)] = 0.0;
        occupied_[static_cast<std::size_t>(c)] = 0;
    }
    heap_.clear();
}

bool Ospa::audit() const {
    std::vector<char> seen(occupied_.size(), 0);
    for (int c : heap_) {
        if (c < 0 || static_cast<std::size_t>(c) >= occupied_.size()) return false;
        if (seen[static_cast<std::size_t>(c)]) return false;  // duplicate in heap
        seen[static_cast<std::size_t>(c)] = 1;
        if (!occupied_[static_cast<std::size_t>(c)]) return false;
    }
    for (std::size_t c = 0; c < occupied_.size(); ++c) {
        if (occupied_[c] != seen[c]) return false;
        if (!occupied_[c] && values_[c] != 0.0) return false;  // scratch left dirty
    }
    for (std::size_t k = 1; k < heap_.size(); ++k)
        if (heap_[(k - 1) / 2] > heap_[k]) return false;  // min-heap property
    if (!heap_.empty()) {
        int leftmost = *std::min_element(heap_.begin(), heap_.end());
        if (heap_.front() != leftmost) return false;
    }
    return true;
}

}  // namespace inertia
