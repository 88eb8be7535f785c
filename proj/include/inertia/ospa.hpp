#pragma once

#include <optional>
#include <vector>

#include "inertia/ecsr.hpp"

namespace inertia {

/// Ordered sparse accumulator: one sparse row held in dense scratch, with a
/// binary min-heap over the occupied column indices so the leftmost nonzero
/// is available in O(1). Column values that cancel to exactly zero remain
/// occupied (structural semantics), which keeps the fill pattern monotone.
///
/// Single-owner working state; reused across rows, always left clean.
class Ospa {
public:
    struct Head {
        int col;
        double value;
    };

    explicit Ospa(int n);

    int count() const { return static_cast<int>(heap_.size()); }
    bool empty() const { return heap_.empty(); }
    bool occupied(int c) const { return occupied_[static_cast<std::size_t>(c)] != 0; }
    /// Value at column c; 0 when the column is not occupied.
    double value_at(int c) const {
        return occupied(c) ? values_[static_cast<std::size_t>(c)] : 0.0;
    }

    /// Loads row i of an ECSR matrix into an empty OSPA (throws when not
    /// empty). The sorted row doubles as an already-valid min-heap.
    void load(const EcsrMatrix& m, int i);

    /// Leftmost occupied column and its value; nullopt when empty.
    /// Non-destructive.
    std::optional<Head> retrieve_head() const;

    /// Removes the leftmost occupied column. Throws when empty.
    void remove_head();

    /// this <- this - factor * (row j of m). Newly touched columns are
    /// heap-inserted; exact cancellation keeps columns occupied. A zero
    /// factor leaves both values and pattern untouched.
    void subtract(const EcsrMatrix& m, int j, double factor);

    /// Exchanges contents with row j of m: the accumulator receives the old
    /// row, row j receives the old accumulator contents in increasing column
    /// order. Throws std::logic_error when row j cannot hold them.
    void swap_row(EcsrMatrix& m, int j);

    /// Copies contents into row i of m (increasing column order) and empties
    /// the accumulator. Throws std::logic_error on capacity violation.
    void store(EcsrMatrix& m, int i);

    /// Internal-consistency check between the heap and the dense scratch;
    /// used by tests.
    bool audit() const;

private:
    void heap_push(int c);
    std::vector<int> sorted_cols() const;
    void write_row(EcsrMatrix& m, int i, const std::vector<int>& cols);

    std::vector<double> values_;
    std::vector<char> occupied_;
    std::vector<int> heap_;  // min-heap of occupied columns
};

}  // namespace inertia
