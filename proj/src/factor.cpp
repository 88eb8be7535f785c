#include "inertia/factor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "inertia/ecsr.hpp"
#include "inertia/ospa.hpp"
#include "inertia/spa2.hpp"

namespace inertia {

const char* variant_name(Variant v) {
    return v == Variant::elementary ? "elementary" : "givens";
}

namespace {

// sign(0) := +1; only the dichotomy negative / nonnegative matters here.
inline bool is_negative(double v) { return v < 0.0; }

// Sign of the determinant sequence, maintained incrementally. The running
// state covers the diagonal of the current upper-trapezoidal factor (zero
// slots counted, negative slots by parity) and the parity of the implicit
// transform's determinant (-1 per row interchange; rotations contribute +1).
struct SignState {
    int zero_diagonals = 0;
    bool negative_parity = false;
    bool transform_parity = false;  // true when det(X) == -1

    void add_diagonal(double d, bool present) {
        if (!present || d == 0.0)
            ++zero_diagonals;
        else if (is_negative(d))
            negative_parity = !negative_parity;
    }
    void replace_diagonal(double old_value, bool old_present, double new_value) {
        if (!old_present || old_value == 0.0)
            --zero_diagonals;
        else if (is_negative(old_value))
            negative_parity = !negative_parity;
        if (is_negative(new_value)) negative_parity = !negative_parity;
    }
    Sign current() const {
        if (zero_diagonals > 0) return Sign::zero;
        return (negative_parity != transform_parity) ? Sign::negative : Sign::positive;
    }
};

struct FactorOutput {
    InertiaReport report;
    std::vector<Sign> signs;
    std::vector<std::vector<int>> patterns;
    std::vector<std::vector<std::pair<int, double>>> rows;
};

[[noreturn]] void throw_nonfinite(int row) {
    throw std::runtime_error("factorization produced a non-finite value at row " +
                             std::to_string(row));
}

void elementary_sweep(const CsrMatrix& a, EcsrMatrix& m, FactorOutput& out, bool want_signs) {
    const int n = a.n;
    InertiaReport& rep = out.report;
    SignState st;
    Ospa s(n);
    for (int i = 0; i < n; ++i) {
        int x = 0;  // row interchanges + diagonal sign changes for this row
        s.load(m, i);
        while (auto hd = s.retrieve_head()) {
            const int j = hd->col;
            if (j >= i) break;
            const double a_ij = hd->value;
            if (a_ij == 0.0) {  // structurally present but exactly zero: skip
                s.remove_head();
                continue;
            }
            const bool diag_present = m.leading_col(j) == j;
            const double d_jj = diag_present ? m.leading_val(j) : 0.0;
            double numer, pivot;
            if (std::abs(d_jj) < std::abs(a_ij)) {
                s.swap_row(m, j);
                ++x;
                ++rep.interchanges;
                if (is_negative(d_jj) != is_negative(a_ij)) ++x;
                st.replace_diagonal(d_jj, diag_present, a_ij);
                st.transform_parity = !st.transform_parity;
                rep.max_row_nnz = std::max(rep.max_row_nnz, m.row_size(j));
                numer = s.value_at(j);  // the displaced old diagonal (0 if absent)
                pivot = a_ij;
            } else {
                numer = a_ij;
                pivot = d_jj;  // |d_jj| >= |a_ij| > 0 here
            }
            if (numer != 0.0) {
                const double f = numer / pivot;
                if (!std::isfinite(f)) throw_nonfinite(i);
                rep.flops += 1 + 2 * static_cast<std::int64_t>(m.row_size(j));
                s.subtract(m, j, f);
            }
            // After a swap the accumulator may lack column j entirely (the
            // incoming row had no diagonal slot); only remove a head that is
            // still the elimination target.
            if (auto hd2 = s.retrieve_head(); hd2 && hd2->col == j) s.remove_head();
        }
        const bool diag_present = s.occupied(i);
        const double d = s.value_at(i);
        if (!diag_present || d == 0.0)
            rep.singular_minor = true;
        else if (is_negative(d))
            ++x;
        st.add_diagonal(d, diag_present);
        if (x % 2 == 1) ++rep.nu;
        if (want_signs) out.signs.push_back(st.current());
        s.store(m, i);
        rep.max_row_nnz = std::max(rep.max_row_nnz, m.row_size(i));
        if (!std::isfinite(d)) throw_nonfinite(i);
    }
}

void givens_sweep(const CsrMatrix& a, EcsrMatrix& m, FactorOutput& out, bool want_signs) {
    const int n = a.n;
    InertiaReport& rep = out.report;
    SignState st;  // transform_parity stays false: rotations have det +1
    Spa2 spa(n);
    for (int i = 0; i < n; ++i) {
        int x = 0;
        spa.load_work(m, i);
        int j = spa.next_work_col(0);
        while (j != -1 && j < i) {
            const double a_ij = spa.work_value(j);
            if (a_ij == 0.0) {
                spa.drop_work_col(j);
                j = spa.next_work_col(j + 1);
                continue;
            }
            const bool diag_present = m.leading_col(j) == j;
            const double d_jj = diag_present ? m.leading_val(j) : 0.0;
            const double r = std::hypot(d_jj, a_ij);
            const double c = d_jj / r;
            const double s = a_ij / r;
            if (!std::isfinite(c) || !std::isfinite(s)) throw_nonfinite(i);
            rep.flops += 5;
            const std::size_t union_size = spa.merge_pivot(m, j);
            spa.rotate(c, s);
            rep.flops += 6 * static_cast<std::int64_t>(union_size);
            const double d_new = spa.pivot_value(j);  // = r up to rounding, > 0
            if (is_negative(d_jj)) ++x;               // replaced diagonal flipped sign
            st.replace_diagonal(d_jj, diag_present, d_new);
            spa.scatter_pivot(m, j);
            rep.max_row_nnz = std::max(rep.max_row_nnz, m.row_size(j));
            j = spa.next_work_col(j + 1);
        }
        const bool diag_present = spa.occupied(i);
        const double d = diag_present ? spa.work_value(i) : 0.0;
        if (!diag_present || d == 0.0)
            rep.singular_minor = true;
        else if (is_negative(d))
            ++x;
        st.add_diagonal(d, diag_present);
        if (x % 2 == 1) ++rep.nu;
        if (want_signs) out.signs.push_back(st.current());
        spa.store_work(m, i);
        rep.max_row_nnz = std::max(rep.max_row_nnz, m.row_size(i));
        if (!std::isfinite(d)) throw_nonfinite(i);
    }
}

FactorOutput run_factorization(const CsrMatrix& a, Variant v, const RowCounts& counts,
                               bool want_signs, bool want_patterns, bool want_rows = false) {
    for (int i = 0; i < a.n; ++i) {
        auto cols = a.row_cols(i);
        if (!std::binary_search(cols.begin(), cols.end(), i))
            throw std::invalid_argument("negative_index: row " + std::to_string(i) +
                                        " lacks an explicit diagonal entry");
    }
    EcsrMatrix m = ecsr_build(a, allocate_capacities(a, counts));
    FactorOutput out;
    out.report.max_row_nnz = m.max_row_size();
    if (v == Variant::elementary)
        elementary_sweep(a, m, out, want_signs);
    else
        givens_sweep(a, m, out, want_signs);
    out.report.final_nnz = m.total_occupied();
    if (want_patterns) {
        out.patterns.resize(a.n);
        for (int i = 0; i < a.n; ++i) {
            auto cols = m.row_cols(i);
            out.patterns[i].assign(cols.begin(), cols.end());
        }
    }
    if (want_rows) {
        out.rows.resize(a.n);
        for (int i = 0; i < a.n; ++i) {
            auto cols = m.row_cols(i);
            auto vals = m.row_vals(i);
            for (std::size_t p = 0; p < cols.size(); ++p)
                out.rows[i].emplace_back(cols[p], vals[p]);
        }
    }
    return out;
}

}  // namespace

InertiaReport negative_index(const CsrMatrix& a, Variant v, const RowCounts& counts) {
    return run_factorization(a, v, counts, false, false).report;
}

std::vector<Sign> det_sign_sequence(const CsrMatrix& a, Variant v) {
    RowCounts counts = r_row_counts(a, col_etree(a));
    return run_factorization(a, v, counts, true, false).signs;
}

std::vector<std::vector<int>> structural_pattern(const CsrMatrix& a, Variant v) {
    RowCounts counts = r_row_counts(a, col_etree(a));
    return run_factorization(a, v, counts, false, true).patterns;
}

std::vector<std::vector<std::pair<int, double>>> factor_rows(const CsrMatrix& a, Variant v) {
    RowCounts counts = r_row_counts(a, col_etree(a));
    return run_factorization(a, v, counts, false, false, true).rows;
}

}  // namespace inertia
