#pragma once

#include <vector>

#include "inertia/ecsr.hpp"

namespace inertia {

/// Two-row sparse accumulator for Givens rotations: two dense value rows with
/// a shared occupied pattern and an unordered list of occupied columns.
///
/// Two usage styles share the same scratch:
///  - the paper-style three-step cycle over one row pair
///    (load_pair / rotate / scatter), and
///  - the sweep interface used by the factorization, where the working row
///    stays resident in slot 1 across all rotations of one sweep and pivot
///    rows pass through slot 0 (load_work / merge_pivot / rotate /
///    scatter_pivot / store_work).
///
/// Keeping the working row resident matters: its occupied count can
/// transiently exceed the predicted final row size, so scattering it back
/// into its ECSR row after every rotation could overflow a tightly sized row.
///
/// Single-owner working state; always left clean after scatter/store.
class Spa2 {
public:
    explicit Spa2(int n);

    int count() const { return static_cast<int>(cols_.size()); }
    bool empty() const { return cols_.empty(); }
    bool occupied(int c) const { return occupied_[static_cast<std::size_t>(c)] != 0; }
    double pivot_value(int c) const { return v0_[static_cast<std::size_t>(c)]; }
    double work_value(int c) const { return v1_[static_cast<std::size_t>(c)]; }

    /// Step 1: copies row j into slot 0 and row k into slot 1, building the
    /// union pattern without duplicate column entries.
    void load_pair(const EcsrMatrix& m, int j, int k);

    /// Step 2: applies the rotation [c s; -s c] to every occupied column.
    void rotate(double c, double s);

    /// Step 3: scatters back after a rotation that annihilated position
    /// (k, j): row j receives all union columns >= j with slot-0 values; row
    /// k receives union columns > j with slot-1 values (exact zeros kept).
    /// Clears the accumulator.
    void scatter(EcsrMatrix& m, int j, int k);

    // Sweep interface.
    void load_work(const EcsrMatrix& m, int i);
    /// Merges row j values into slot 0 over the union pattern; returns the
    /// union size (the number of columns a rotation will touch).
    std::size_t merge_pivot(const EcsrMatrix& m, int j);
    /// Writes the rotated pivot row (all union columns, slot-0 values) into
    /// row j, zeroes slot 0, and removes column j from the working pattern.
    void scatter_pivot(EcsrMatrix& m, int j);
    /// Writes the remaining working row into row i and clears everything.
    void store_work(EcsrMatrix& m, int i);
    /// Drops an exactly-zero leading entry of the working row.
    void drop_work_col(int c);
    /// Smallest occupied column >= from, or -1. The sweep advances a cursor,
    /// so the combined scan cost per sweep is O(n).
    int next_work_col(int from) const;

private:
    void add_col(int c) {
        occupied_[static_cast<std::size_t>(c)] = 1;
        cols_.push_back(c);
    }
    void clear_all();

    std::vector<double> v0_;  // pivot-row values
    std::vector<double> v1_;  // working-row values
    std::vector<char> occupied_;
    std::vector<int> cols_;  // unordered occupied columns
};

}  // namespace inertia
