#include "inertia/spa2.hpp"

#include <algorithm>
#include <stdexcept>

namespace inertia {

Spa2::Spa2(int n)
    : v0_(static_cast<std::size_t>(n), 0.0),
      v1_(static_cast<std::size_t>(n), 0.0),
      occupied_(static_cast<std::size_t>(n), 0) {}

void Spa2::load_pair(const EcsrMatrix& m, int j, int k) {
    if (!empty()) throw std::logic_error("spa2: load_pair into non-empty accumulator");
    auto jc = m.row_cols(j);
    auto jv = m.row_vals(j);
    for (std::size_t p = 0; p < jc.size(); ++p) {
        add_col(jc[p]);
        v0_[static_cast<std::size_t>(jc[p])] = jv[p];
    }
    auto kc = m.row_cols(k);
    auto kv = m.row_vals(k);
    for (std::size_t p = 0; p < kc.size(); ++p) {
        if (!occupied(kc[p])) add_col(kc[p]);
        v1_[static_cast<std::size_t>(kc[p])] = kv[p];
    }
}

void Spa2::rotate(double c, double s) {
    for (int col : cols_) {
        auto q = static_cast<std::size_t>(col);
        double a = v0_[q];
        double b = v1_[q];
        v0_[q] = c * a + s * b;
        v1_[q] = -s * a + c * b;
    }
}

void Spa2::scatter(EcsrMatrix& m, int j, int k) {
    std::vector<int> sorted = cols_;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> cj;
    std::vector<double> vj, vk;
    for (int col : sorted) {
        if (col < j) throw std::logic_error("spa2: union column left of elimination target");
        vj.push_back(v0_[static_cast<std::size_t>(col)]);
        cj.push_back(col);
        if (col > j) vk.push_back(v1_[static_cast<std::size_t>(col)]);
    }
    m.set_row(j, cj.data(), vj.data(), cj.size());
    const int* ck = cj.empty() || cj.front() != j ? cj.data() : cj.data() + 1;
    m.set_row(k, ck, vk.data(), vk.size());
    clear_all();
}

void Spa2::load_work(const EcsrMatrix& m, int i) {
    if (!empty()) throw std::logic_error("spa2: load_work into non-empty accumulator");
    auto cols = m.row_cols(i);
    auto vals = m.row_vals(i);
    for (std::size_t p = 0; p < cols.size(); ++p) {
        add_col(cols[p]);
        v1_[static_cast<std::size_t>(cols[p])] = vals[p];
    }
}

std::size_t Spa2::merge_pivot(const EcsrMatrix& m, int j) {
    auto cols = m.row_cols(j);
    auto vals = m.row_vals(j);
    for (std::size_t p = 0; p < cols.size(); ++p) {
        if (!occupied(cols[p])) add_col(cols[p]);
        v0_[static_cast<std::size_t>(cols[p])] = vals[p];
    }
    return cols_.size();
}

void Spa2::scatter_pivot(EcsrMatrix& m, int j) {
    std::vector<int> sorted = cols_;
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> vals(sorted.size());
    for (std::size_t p = 0; p < sorted.size(); ++p)
        vals[p] = v0_[static_cast<std::size_t>(sorted[p])];
    m.set_row(j, sorted.data(), vals.data(), sorted.size());
    for (int col : sorted) v0_[static_cast<std::size_t>(col)] = 0.0;
    // Column j is annihilated in the working row; all union columns are >= j,
    // so it is the first of the sorted list when present.
    if (!sorted.empty() && sorted.front() == j) {
        occupied_[static_cast<std::size_t>(j)] = 0;
        v1_[static_cast<std::size_t>(j)] = 0.0;
        cols_.assign(sorted.begin() + 1, sorted.end());
    } else {
        cols_ = std::move(sorted);
    }
}

void Spa2::store_work(EcsrMatrix& m, int i) {
    std::vector<int> sorted = cols_;
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> vals(sorted.size());
    for (std::size_t p = 0; p < sorted.size(); ++p)
        vals[p] = v1_[static_cast<std::size_t>(sorted[p])];
    m.set_row(i, sorted.data(), vals.data(), sorted.size());
    clear_all();
}

void Spa2::drop_work_col(int c) {
    occupied_[static_cast<std::size_t>(c)] = 0;
    v1_[static_cast<std::size_t>(c)] = 0.0;
    v0_[static_cast<std::size_t>(c)] = 0.0;
    cols_.erase(std::find(cols_.begin(), cols_.end(), c));
}

int Spa2::next_work_col(int from) const {
    for (std::size_t c = static_cast<std::size_t>(from); c < occupied_.size(); ++c)
        if (occupied_[c]) return static_cast<int>(c);
    return -1;
}

void Spa2::clear_all() {
    for (int col : cols_) {
        auto q = static_cast<std::size_t>(col);
        v0_[q] = 0.0;
        v1_[q] = 0.0;
        occupied_[q] = 0;
    }
    cols_.clear();
}

}  // namespace inertia
