#pragma once

#include <cstdint>
#include <vector>

#include "inertia/csr.hpp"
#include "inertia/factor.hpp"

namespace inertia {

/// Bisection controls. tau is the relative accuracy: intervals stop shrinking
/// at 2*tau*||A||_1 and the midpoint is reported. When an inertia evaluation
/// flags a singular minor, the shift is retried at nudged positions
/// (+-nudge*||A||_1, then +-2*nudge*||A||_1, clamped inside the bracket) up
/// to max_singular_retries times before the last result is accepted.
struct BisectionParams {
    double tau = 0x1.0p-52;
    Variant variant = Variant::elementary;
    int max_singular_retries = 3;
    double nudge = 0x1.0p-40;
};

struct EigResult {
    std::vector<double> values;        // sorted, duplicated per multiplicity
    std::int64_t inertia_evals = 0;    // nu computations performed (retries included)
    std::int64_t singular_retries = 0;
    bool retry_budget_exhausted = false;
    bool endpoint_singular = false;  // eig_in_interval: a flagged endpoint count
};

/// All n eigenvalues, each within tau*||A||_1 of a true eigenvalue with
/// matching counts. Initial bracket [-||A||_1, ||A||_1).
EigResult eig_all(const CsrMatrix& a, const BisectionParams& p);

/// Eigenvalues in the half-open interval [x0, x1); returns exactly
/// nu(A - x1 I) - nu(A - x0 I) values.
EigResult eig_in_interval(const CsrMatrix& a, const BisectionParams& p, double x0, double x1);

/// Eigenvalues lambda_lo..lambda_hi by ascending ordinal (1-based,
/// 1 <= lo <= hi <= n). Subintervals whose ordinal range is disjoint from
/// [lo, hi] are pruned.
EigResult eig_by_ordinal(const CsrMatrix& a, const BisectionParams& p, int lo, int hi);

struct IntervalCount {
    std::int64_t count = 0;
    bool singular_warning = false;  // a singular minor at either endpoint
};

/// Number of eigenvalues in [x0, x1): nu(A - x1 I) - nu(A - x0 I).
IntervalCount count_in_interval(const CsrMatrix& a, Variant v, double x0, double x1);

}  // namespace inertia
