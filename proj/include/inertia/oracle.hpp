#pragma once

#include <cstdint>
#include <vector>

#include "inertia/csr.hpp"
#include "inertia/factor.hpp"

namespace inertia {

/// Dense symmetric matrix; entries (i,j) and (j,i) are kept bitwise equal.
class DenseSym {
public:
    DenseSym() = default;
    explicit DenseSym(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

    int dim() const { return n_; }
    double at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    /// Sets both (i,j) and (j,i).
    void set(int i, int j, double v) {
        a_[static_cast<std::size_t>(i) * n_ + j] = v;
        a_[static_cast<std::size_t>(j) * n_ + i] = v;
    }

private:
    int n_ = 0;
    std::vector<double> a_;
};

struct DenseInertia {
    int nu = 0;
    bool singular_minor = false;
    std::int64_t interchanges = 0;
};

/// Dense row-by-row reduction with pairwise pivoting; the reference the
/// sparse elementary variant must match exactly (same swap test, same
/// zero conventions, eliminated entries zeroed outright).
DenseInertia dense_negative_index(DenseSym a);

/// Cyclic Jacobi eigensolver: sweeps until the off-diagonal Frobenius norm
/// falls below tol times the total Frobenius norm. Returns sorted
/// eigenvalues. Throws when the sweep budget is exceeded.
std::vector<double> jacobi_eigenvalues(const DenseSym& a, double tol = 1e-14);

/// Exact signs of det(A_k) for k = 1..n of an integer symmetric matrix via
/// fraction-free elimination in wide integers. Requires n <= 16; throws
/// std::overflow_error when intermediate values exceed the supported width.
std::vector<Sign> exact_det_signs(const std::vector<std::vector<std::int64_t>>& a);

/// Random test-matrix specification: A = Q diag(lambda) Q^T with Q a random
/// orthogonal matrix. In modes 1-5 lambda_i = s_i * sigma_i with independent
/// random signs s_i and mode-dependent singular values sigma_i:
///   1: sigma_1 = 1, the rest 1/kappa
///   2: sigma_1..sigma_{n-1} = 1, sigma_n = 1/kappa
///   3: evenly spaced between 1 and 1/kappa on a log scale
///   4: evenly spaced between 1 and 1/kappa on a linear scale
///   5: (1/kappa)^e with e uniform on (0,1)
/// Mode 6 draws lambda_i directly from N(0,1).
struct LatmsSpec {
    int n;
    int mode;      // 1..6
    double kappa;  // >= 1
    std::uint64_t seed;
};

struct LatmsMatrix {
    DenseSym matrix;
    std::vector<double> eigenvalues;  // planted spectrum, sorted ascending
};

DenseSym latms_generate(const LatmsSpec& spec);
/// Same construction, also returning the planted eigenvalues.
LatmsMatrix latms_generate_full(const LatmsSpec& spec);

/// The singular-minor stress construction: A = [X Z^T; Z 0] with
/// X = Q diag(1, e_1, ..., e_{n/2-1}) Q^T, e_i ~ N(0, (2^-52)^2), and Z a
/// dense standard Gaussian block. All leading principal minors of orders
/// 2..n-1 are nearly singular while A itself is well conditioned.
/// Requires n even.
DenseSym instability_example(int n, std::uint64_t seed);

/// Full-pattern CSR copy (every entry explicit, zeros included), so sparse
/// runs see the same structure the dense reference sees.
CsrMatrix to_csr(const DenseSym& a);

}  // namespace inertia
