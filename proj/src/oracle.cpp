#include "inertia/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "inertia/rng.hpp"

namespace inertia {

namespace {
inline bool is_negative(double v) { return v < 0.0; }
}

DenseInertia dense_negative_index(DenseSym a) {
    const int n = a.dim();
    std::vector<std::vector<double>> m(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = a.at(i, j);

    DenseInertia result;
    for (int i = 0; i < n; ++i) {
        int x = 0;
        for (int j = 0; j < i; ++j) {
            const double a_ij = m[i][j];
            if (a_ij == 0.0) continue;
            const double d_jj = m[j][j];
            if (std::abs(d_jj) < std::abs(a_ij)) {
                std::swap(m[i], m[j]);
                ++x;
                ++result.interchanges;
                if (is_negative(d_jj) != is_negative(a_ij)) ++x;
            }
            const double numer = m[i][j];
            const double pivot = m[j][j];
            if (numer != 0.0) {
                const double f = numer / pivot;
                for (int k = j + 1; k < n; ++k) m[i][k] -= f * m[j][k];
            }
            m[i][j] = 0.0;  // annihilated exactly, as in the sparse update
        }
        const double d = m[i][i];
        if (d == 0.0)
            result.singular_minor = true;
        else if (is_negative(d))
            ++x;
        if (x % 2 == 1) ++result.nu;
    }
    return result;
}

std::vector<double> jacobi_eigenvalues(const DenseSym& a, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("jacobi_eigenvalues: tol must be positive");
    const int n = a.dim();
    std::vector<std::vector<double>> m(n, std::vector<double>(n));
    double norm_sq = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            m[i][j] = a.at(i, j);
            norm_sq += m[i][j] * m[i][j];
        }
    const double norm_f = std::sqrt(norm_sq);

    const int max_sweeps = 60;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off_sq = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off_sq += 2.0 * m[p][q] * m[p][q];
        if (std::sqrt(off_sq) <= tol * norm_f || n < 2) {
            std::vector<double> ev(n);
            for (int i = 0; i < n; ++i) ev[i] = m[i][i];
            std::sort(ev.begin(), ev.end());
            return ev;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = m[p][q];
                if (apq == 0.0) continue;
                const double theta = (m[q][q] - m[p][p]) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e154) {
                    t = 1.0 / (2.0 * theta);  // avoid overflow in theta^2
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double app = m[p][p];
                const double aqq = m[q][q];
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = m[k][p];
                    const double akq = m[k][q];
                    m[k][p] = m[p][k] = c * akp - s * akq;
                    m[k][q] = m[q][k] = s * akp + c * akq;
                }
                m[p][p] = app - t * apq;
                m[q][q] = aqq + t * apq;
                m[p][q] = m[q][p] = 0.0;
            }
        }
    }
    throw std::runtime_error("jacobi_eigenvalues: sweep budget exceeded");
}

namespace {

using int128 = __int128;

// Exact determinant of one integer matrix by fraction-free (Bareiss)
// elimination with row interchanges. Values stay determinants of minors, so
// the width guard below is also a bound on every intermediate.
Sign exact_det_sign(std::vector<std::vector<int128>> m) {
    const int k = static_cast<int>(m.size());
    const int128 limit = static_cast<int128>(1) << 62;
    int sign_flips = 0;
    int128 prev = 1;
    for (int c = 0; c < k; ++c) {
        int pivot_row = -1;
        for (int r = c; r < k; ++r)
            if (m[r][c] != 0) {
                pivot_row = r;
                break;
            }
        if (pivot_row == -1) return Sign::zero;
        if (pivot_row != c) {
            std::swap(m[pivot_row], m[c]);
            ++sign_flips;
        }
        for (int r = c + 1; r < k; ++r) {
            for (int j = c + 1; j < k; ++j) {
                if (m[r][j] > limit || m[r][j] < -limit || m[c][c] > limit || m[c][c] < -limit)
                    throw std::overflow_error("exact_det_signs: width exceeded");
                m[r][j] = (m[r][j] * m[c][c] - m[r][c] * m[c][j]) / prev;
            }
            m[r][c] = 0;
        }
        prev = m[c][c];
    }
    int128 det = m[k - 1][k - 1];
    if (det == 0) return Sign::zero;
    bool negative = (det < 0) != (sign_flips % 2 == 1);
    return negative ? Sign::negative : Sign::positive;
}

}  // namespace

std::vector<Sign> exact_det_signs(const std::vector<std::vector<std::int64_t>>& a) {
    const int n = static_cast<int>(a.size());
    if (n > 16) throw std::invalid_argument("exact_det_signs: n must be <= 16");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(a[i].size()) != n)
            throw std::invalid_argument("exact_det_signs: ragged input");
        for (int j = 0; j < n; ++j)
            if (a[i][j] != a[j][i])
                throw std::invalid_argument("exact_det_signs: input not symmetric");
    }
    std::vector<Sign> signs;
    signs.reserve(n);
    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<int128>> minor(k, std::vector<int128>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) minor[i][j] = a[i][j];
        signs.push_back(exact_det_sign(std::move(minor)));
    }
    return signs;
}

namespace {

// Q factor of the Householder QR of a standard Gaussian sample, with column
// signs fixed so the implicit R has a positive diagonal. This makes Q a
// deterministic function of the stream and Haar-distributed.
std::vector<std::vector<double>> random_orthogonal(int n, Rng& rng) {
    std::vector<std::vector<double>> m(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = rng.normal();

    std::vector<std::vector<double>> q(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) q[i][i] = 1.0;
    std::vector<double> v(n);
    std::vector<double> diag_sign(n, 1.0);
    for (int k = 0; k < n; ++k) {
        double norm_sq = 0.0;
        for (int i = k; i < n; ++i) norm_sq += m[i][k] * m[i][k];
        double alpha = std::sqrt(norm_sq);
        if (alpha == 0.0) {
            diag_sign[k] = 1.0;
            continue;
        }
        if (m[k][k] > 0.0) alpha = -alpha;
        diag_sign[k] = alpha > 0.0 ? 1.0 : -1.0;  // R_kk = alpha
        double vnorm_sq = 0.0;
        for (int i = k; i < n; ++i) {
            v[i] = (i == k) ? m[k][k] - alpha : m[i][k];
            vnorm_sq += v[i] * v[i];
        }
        if (vnorm_sq == 0.0) continue;
        const double beta = 2.0 / vnorm_sq;
        for (int j = k; j < n; ++j) {  // reflect the remaining columns of m
            double dot = 0.0;
            for (int i = k; i < n; ++i) dot += v[i] * m[i][j];
            const double f = beta * dot;
            for (int i = k; i < n; ++i) m[i][j] -= f * v[i];
        }
        for (int j = 0; j < n; ++j) {  // accumulate Q <- Q * H_k
            double dot = 0.0;
            for (int i = k; i < n; ++i) dot += v[i] * q[j][i];
            const double f = beta * dot;
            for (int i = k; i < n; ++i) q[j][i] -= f * v[i];
        }
    }
    for (int k = 0; k < n; ++k)
        if (diag_sign[k] < 0.0)
            for (int i = 0; i < n; ++i) q[i][k] = -q[i][k];
    return q;
}

DenseSym similarity_from_spectrum(const std::vector<double>& lambda,
                                  const std::vector<std::vector<double>>& q) {
    const int n = static_cast<int>(lambda.size());
    // A = Q diag(lambda) Q^T, then exact symmetrization (M + M^T) / 2.
    std::vector<std::vector<double>> b(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b[i][j] = q[i][j] * lambda[j];
    DenseSym a(n);
    for (int i = 0; i < n; ++i) {
        for (int k = i; k < n; ++k) {
            double mik = 0.0, mki = 0.0;
            for (int j = 0; j < n; ++j) {
                mik += b[i][j] * q[k][j];
                mki += b[k][j] * q[i][j];
            }
            a.set(i, k, 0.5 * (mik + mki));
        }
    }
    return a;
}

}  // namespace

LatmsMatrix latms_generate_full(const LatmsSpec& spec) {
    if (spec.mode < 1 || spec.mode > 6)
        throw std::invalid_argument("latms_generate: mode must be in 1..6");
    if (!(spec.kappa >= 1.0))
        throw std::invalid_argument("latms_generate: kappa must be >= 1");
    if (spec.n < 1) throw std::invalid_argument("latms_generate: n must be positive");
    const int n = spec.n;
    Rng rng(spec.seed);

    std::vector<double> lambda(n);
    if (spec.mode == 6) {
        for (int i = 0; i < n; ++i) lambda[i] = rng.normal();
    } else {
        std::vector<double> sigma(n);
        switch (spec.mode) {
            case 1:
                sigma[0] = 1.0;
                for (int i = 1; i < n; ++i) sigma[i] = 1.0 / spec.kappa;
                break;
            case 2:
                for (int i = 0; i < n - 1; ++i) sigma[i] = 1.0;
                sigma[n - 1] = 1.0 / spec.kappa;
                break;
            case 3:
                for (int i = 0; i < n; ++i)
                    sigma[i] = n == 1 ? 1.0
                                      : std::pow(spec.kappa,
                                                 -static_cast<double>(i) / (n - 1));
                break;
            case 4:
                for (int i = 0; i < n; ++i)
                    sigma[i] = n == 1 ? 1.0
                                      : 1.0 - static_cast<double>(i) / (n - 1) *
                                                  (1.0 - 1.0 / spec.kappa);
                break;
            case 5:
                for (int i = 0; i < n; ++i)
                    sigma[i] = std::pow(1.0 / spec.kappa, rng.uniform_open0());
                break;
        }
        for (int i = 0; i < n; ++i) lambda[i] = rng.random_sign() * sigma[i];
    }

    auto q = random_orthogonal(n, rng);
    LatmsMatrix out{similarity_from_spectrum(lambda, q), lambda};
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
    return out;
}

DenseSym latms_generate(const LatmsSpec& spec) { return latms_generate_full(spec).matrix; }

DenseSym instability_example(int n, std::uint64_t seed) {
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("instability_example: n must be even and >= 2");
    const int h = n / 2;
    Rng rng(seed);
    std::vector<double> d(h);
    d[0] = 1.0;
    for (int i = 1; i < h; ++i) d[i] = 0x1.0p-52 * rng.normal();
    auto q = random_orthogonal(h, rng);
    DenseSym x = similarity_from_spectrum(d, q);

    DenseSym a(n);
    for (int i = 0; i < h; ++i)
        for (int j = i; j < h; ++j) a.set(i, j, x.at(i, j));
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j) a.set(h + i, j, rng.normal());  // Z and Z^T
    return a;  // trailing h-by-h block stays zero
}

CsrMatrix to_csr(const DenseSym& a) {
    const int n = a.dim();
    CsrMatrix c;
    c.n = n;
    c.row_ptr.resize(n + 1);
    c.col_idx.resize(static_cast<std::size_t>(n) * n);
    c.values.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i <= n; ++i) c.row_ptr[i] = static_cast<std::size_t>(i) * n;
    std::size_t p = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j, ++p) {
            c.col_idx[p] = j;
            c.values[p] = a.at(i, j);
        }
    return c;
}

}  // namespace inertia
