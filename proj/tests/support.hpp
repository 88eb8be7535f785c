#pragma once

// Shared test fixtures: matrix generators and brute-force oracles. The
// oracles are deliberately naive and independent of the library's symbolic
// machinery so they can vouch for it.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "inertia/csr.hpp"
#include "inertia/oracle.hpp"
#include "inertia/rng.hpp"

namespace testsupport {

/// 2-D 5-point grid Laplacian on a k-by-k grid (n = k^2), minus shift*I.
inline inertia::CsrMatrix grid_laplacian(int k, double shift) {
    std::vector<inertia::Triplet> t;
    auto id = [k](int r, int c) { return r * k + c; };
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) {
            t.push_back({id(r, c), id(r, c), 4.0 - shift});
            if (r + 1 < k) t.push_back({id(r, c), id(r + 1, c), -1.0});
            if (c + 1 < k) t.push_back({id(r, c), id(r, c + 1), -1.0});
        }
    }
    return inertia::csr_from_triplets(k * k, t);
}

/// Symmetric tridiagonal with constant diagonal and off-diagonal.
inline inertia::CsrMatrix tridiagonal(int n, double diag, double off) {
    std::vector<inertia::Triplet> t;
    for (int i = 0; i < n; ++i) {
        t.push_back({i, i, diag});
        if (i + 1 < n) t.push_back({i, i + 1, off});
    }
    return inertia::csr_from_triplets(n, t);
}

/// Closed-form spectrum of tridiag(off, diag, off): diag + 2*off*cos(k*pi/(n+1)).
inline std::vector<double> tridiagonal_eigenvalues(int n, double diag, double off) {
    std::vector<double> ev(n);
    const double pi = 3.14159265358979323846;
    for (int k = 1; k <= n; ++k) ev[k - 1] = diag + 2.0 * off * std::cos(k * pi / (n + 1));
    std::sort(ev.begin(), ev.end());
    return ev;
}

inline inertia::CsrMatrix diag_matrix(const std::vector<double>& d) {
    std::vector<inertia::Triplet> t;
    for (int i = 0; i < static_cast<int>(d.size()); ++i) t.push_back({i, i, d[i]});
    return inertia::csr_from_triplets(static_cast<int>(d.size()), t);
}

/// Random sparse symmetric matrix with Gaussian values, explicit Gaussian
/// diagonal, and the given off-diagonal density.
inline inertia::CsrMatrix random_sparse_symmetric(int n, double density, inertia::Rng& rng) {
    std::vector<inertia::Triplet> t;
    for (int i = 0; i < n; ++i) {
        t.push_back({i, i, rng.normal()});
        for (int j = i + 1; j < n; ++j)
            if (rng.uniform() < density) t.push_back({i, j, rng.normal()});
    }
    return inertia::csr_from_triplets(n, t);
}

/// Dense symmetric Gaussian matrix (entries N(0,1), mirrored).
inline inertia::DenseSym random_gaussian_sym(int n, inertia::Rng& rng) {
    inertia::DenseSym a(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) a.set(i, j, rng.normal());
    return a;
}

/// Random integer symmetric matrix with entries in [lo, hi].
inline std::vector<std::vector<std::int64_t>> random_int_sym(int n, int lo, int hi,
                                                             inertia::Rng& rng) {
    std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) a[i][j] = a[j][i] = rng.uniform_int(lo, hi);
    return a;
}

inline inertia::DenseSym int_to_dense(const std::vector<std::vector<std::int64_t>>& a) {
    const int n = static_cast<int>(a.size());
    inertia::DenseSym d(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) d.set(i, j, static_cast<double>(a[i][j]));
    return d;
}

// ---- brute-force symbolic oracles -----------------------------------------

/// Pattern of A^T A as a dense boolean matrix.
inline std::vector<std::vector<bool>> brute_ata_pattern(const inertia::CsrMatrix& a) {
    std::vector<std::vector<bool>> m(a.n, std::vector<bool>(a.n, false));
    for (int r = 0; r < a.n; ++r) {
        auto cols = a.row_cols(r);
        for (int ci : cols)
            for (int cj : cols) m[ci][cj] = true;
    }
    return m;
}

struct BruteSymbolicCholesky {
    std::vector<int> parent;     // elimination tree
    std::vector<int> colcounts;  // nnz per column of the factor
};

/// No-cancellation boolean elimination of a symmetric pattern.
inline BruteSymbolicCholesky brute_symbolic_cholesky(std::vector<std::vector<bool>> m) {
    const int n = static_cast<int>(m.size());
    for (int k = 0; k < n; ++k)
        for (int i = k + 1; i < n; ++i)
            if (m[i][k])
                for (int j = k; j < n; ++j) m[i][j] = m[i][j] || m[k][j];
    BruteSymbolicCholesky out;
    out.parent.assign(n, -1);
    out.colcounts.assign(n, 0);
    for (int j = 0; j < n; ++j) {
        for (int i = j; i < n; ++i)
            if (m[i][j]) ++out.colcounts[j];
        for (int i = j + 1; i < n; ++i)
            if (m[i][j]) {
                out.parent[j] = i;
                break;
            }
    }
    return out;
}

/// Row-merge symbolic QR: processes rows in order, replacing the pivot row's
/// pattern with the union and the working row with the union minus the
/// eliminated column. Returns the final per-row patterns.
inline std::vector<std::set<int>> brute_symbolic_qr(const inertia::CsrMatrix& a) {
    std::vector<std::set<int>> rows(a.n);
    for (int i = 0; i < a.n; ++i) {
        std::set<int> w(a.row_cols(i).begin(), a.row_cols(i).end());
        while (!w.empty() && *w.begin() < i) {
            const int j = *w.begin();
            std::set<int> u = rows[j];
            u.insert(w.begin(), w.end());
            rows[j] = u;
            u.erase(j);
            w = std::move(u);
        }
        rows[i] = std::move(w);
    }
    return rows;
}

}  // namespace testsupport
