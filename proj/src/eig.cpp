#include "inertia/eig.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "inertia/symbolic.hpp"

namespace inertia {

namespace {

void validate(const BisectionParams& p) {
    if (!(p.tau > 0.0 && p.tau < 1.0))
        throw std::invalid_argument("bisection: tau must be in (0, 1)");
    if (!(p.nudge > 0.0 && p.nudge < 1.0))
        throw std::invalid_argument("bisection: nudge must be in (0, 1)");
    if (p.max_singular_retries < 0)
        throw std::invalid_argument("bisection: negative retry budget");
}

struct Evaluator {
    const CsrMatrix& a;
    const BisectionParams& params;
    const RowCounts counts;
    const double norm1;
    EigResult* result;

    explicit Evaluator(const CsrMatrix& matrix, const BisectionParams& p, double norm,
                       EigResult* res)
        : a(matrix), params(p), counts(r_row_counts(matrix, col_etree(matrix))), norm1(norm),
          result(res) {}

    int nu_at(double x, bool& singular) const {
        InertiaReport rep = negative_index(shifted(a, x), params.variant, counts);
        ++result->inertia_evals;
        singular = rep.singular_minor;
        return rep.nu;
    }

    // Evaluates nu(A - xI); on a singular minor, retries at nudged shifts
    // that stay strictly inside (lo, hi). The shift actually used is written
    // back through x so the caller splits exactly where nu was evaluated.
    int nu_with_retries(double& x, double lo, double hi) const {
        bool singular = false;
        int nu = nu_at(x, singular);
        if (!singular) return nu;
        const double step = params.nudge * norm1;
        double last_x = x;
        int used = 0;
        for (int attempt = 1;
             attempt <= 4 * params.max_singular_retries && used < params.max_singular_retries;
             ++attempt) {
            const double magnitude = step * ((attempt + 1) / 2);
            const double candidate = (attempt % 2 == 1) ? x + magnitude : x - magnitude;
            if (!(candidate > lo && candidate < hi)) continue;
            ++used;
            ++result->singular_retries;
            nu = nu_at(candidate, singular);
            last_x = candidate;
            if (!singular) {
                x = candidate;
                return nu;
            }
        }
        result->retry_budget_exhausted = true;
        x = last_x;
        return nu;  // proceed with the last (flagged) result
    }
};

struct Bracket {
    double x0, x1;
    int nu0, nu1;
};

// Iterative bisection over an explicit work stack. ordinal_lo/hi of 0 means
// "keep everything"; otherwise leaves emit only ordinals inside [lo, hi].
void bisect(const Evaluator& ev, Bracket root, double stop_width, int ordinal_lo, int ordinal_hi,
            EigResult& out) {
    if (root.nu1 <= root.nu0) return;
    std::vector<Bracket> stack{root};
    while (!stack.empty()) {
        Bracket b = stack.back();
        stack.pop_back();
        if (ordinal_lo > 0 && (b.nu1 < ordinal_lo || b.nu0 + 1 > ordinal_hi)) continue;
        double x = b.x0 + 0.5 * (b.x1 - b.x0);
        if (b.x1 - b.x0 > stop_width && x > b.x0 && x < b.x1) {
            int mu = ev.nu_with_retries(x, b.x0, b.x1);
            mu = std::clamp(mu, b.nu0, b.nu1);  // keeps per-node counts conserved
            // Push right first so values emit in ascending order.
            if (b.nu1 > mu) stack.push_back({x, b.x1, mu, b.nu1});
            if (mu > b.nu0) stack.push_back({b.x0, x, b.nu0, mu});
        } else {
            int lo = b.nu0 + 1, hi = b.nu1;
            if (ordinal_lo > 0) {
                lo = std::max(lo, ordinal_lo);
                hi = std::min(hi, ordinal_hi);
            }
            for (int k = lo; k <= hi; ++k) out.values.push_back(x);
        }
    }
}

}  // namespace

EigResult eig_all(const CsrMatrix& a, const BisectionParams& p) {
    validate(p);
    if (a.n < 1) throw std::invalid_argument("eig_all: empty matrix");
    const double norm = one_norm(a);
    if (!std::isfinite(norm)) throw std::invalid_argument("eig_all: non-finite matrix norm");
    EigResult out;
    if (norm == 0.0) {  // the zero matrix: eigenvalues are all exactly 0
        out.values.assign(a.n, 0.0);
        return out;
    }
    Evaluator ev(a, p, norm, &out);
    bisect(ev, {-norm, norm, 0, a.n}, 2.0 * p.tau * norm, 0, 0, out);
    std::sort(out.values.begin(), out.values.end());
    return out;
}

EigResult eig_in_interval(const CsrMatrix& a, const BisectionParams& p, double x0, double x1) {
    validate(p);
    if (!(x0 < x1)) throw std::invalid_argument("eig_in_interval: require x0 < x1");
    const double norm = one_norm(a);
    if (!std::isfinite(norm)) throw std::invalid_argument("eig_in_interval: non-finite norm");
    EigResult out;
    Evaluator ev(a, p, std::max(norm, 1e-300), &out);
    bool sing0 = false, sing1 = false;
    const int nu0 = ev.nu_at(x0, sing0);
    const int nu1 = ev.nu_at(x1, sing1);
    out.endpoint_singular = sing0 || sing1;
    bisect(ev, {x0, x1, nu0, nu1}, 2.0 * p.tau * norm, 0, 0, out);
    std::sort(out.values.begin(), out.values.end());
    return out;
}

EigResult eig_by_ordinal(const CsrMatrix& a, const BisectionParams& p, int lo, int hi) {
    validate(p);
    if (lo < 1 || hi > a.n || lo > hi)
        throw std::invalid_argument("eig_by_ordinal: ordinals out of range");
    const double norm = one_norm(a);
    if (!std::isfinite(norm)) throw std::invalid_argument("eig_by_ordinal: non-finite norm");
    EigResult out;
    if (norm == 0.0) {
        out.values.assign(hi - lo + 1, 0.0);
        return out;
    }
    Evaluator ev(a, p, norm, &out);
    bisect(ev, {-norm, norm, 0, a.n}, 2.0 * p.tau * norm, lo, hi, out);
    std::sort(out.values.begin(), out.values.end());
    return out;
}

IntervalCount count_in_interval(const CsrMatrix& a, Variant v, double x0, double x1) {
    if (!(x0 <= x1)) throw std::invalid_argument("count_in_interval: require x0 <= x1");
    if (x0 == x1) return {0, false};
    const RowCounts counts = r_row_counts(a, col_etree(a));
    InertiaReport r0 = negative_index(shifted(a, x0), v, counts);
    InertiaReport r1 = negative_index(shifted(a, x1), v, counts);
    return {static_cast<std::int64_t>(r1.nu) - r0.nu, r0.singular_minor || r1.singular_minor};
}

}  // namespace inertia
