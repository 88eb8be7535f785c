#include "inertia/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace inertia {

namespace {

[[noreturn]] void fail(const std::string& name, std::size_t line, const std::string& what) {
    throw std::runtime_error(name + ":" + std::to_string(line) + ": " + what);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

}  // namespace

CsrMatrix read_matrix_market(std::istream& in, const std::string& name) {
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(in, line)) fail(name, 1, "empty file");
    ++lineno;

    std::istringstream header(line);
    std::string banner, object, format, field, symmetry;
    header >> banner >> object >> format >> field >> symmetry;
    if (banner != "%%MatrixMarket") fail(name, lineno, "missing %%MatrixMarket banner");
    object = lower(object);
    format = lower(format);
    field = lower(field);
    symmetry = lower(symmetry);
    if (object != "matrix") fail(name, lineno, "unsupported object '" + object + "'");
    if (format != "coordinate") fail(name, lineno, "unsupported format '" + format + "'");
    if (field == "complex") fail(name, lineno, "complex matrices are not supported");
    if (field != "real" && field != "integer" && field != "pattern")
        fail(name, lineno, "unsupported field '" + field + "'");
    if (symmetry == "hermitian" || symmetry == "skew-symmetric")
        fail(name, lineno, "unsupported symmetry '" + symmetry + "'");
    if (symmetry != "general" && symmetry != "symmetric")
        fail(name, lineno, "unsupported symmetry '" + symmetry + "'");
    const bool pattern = field == "pattern";
    const bool symmetric_storage = symmetry == "symmetric";

    long long rows = -1, cols = -1, entries = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '%') continue;
        std::istringstream sz(line);
        if (!(sz >> rows >> cols >> entries)) fail(name, lineno, "malformed size line");
        break;
    }
    if (rows < 0) fail(name, lineno, "missing size line");
    if (rows != cols) fail(name, lineno, "matrix is not square");
    if (rows > INT32_MAX) fail(name, lineno, "dimension too large");
    const int n = static_cast<int>(rows);

    std::vector<Triplet> triplets;
    triplets.reserve(static_cast<std::size_t>(entries) * (symmetric_storage ? 2 : 1));
    long long seen = 0;
    while (seen < entries) {
        if (!std::getline(in, line)) fail(name, lineno + 1, "unexpected end of file");
        ++lineno;
        if (line.empty() || line[0] == '%') continue;
        std::istringstream es(line);
        long long i = 0, j = 0;
        double v = 1.0;
        if (!(es >> i >> j)) fail(name, lineno, "malformed entry");
        if (!pattern && !(es >> v)) fail(name, lineno, "missing value");
        if (i < 1 || i > n || j < 1 || j > n) fail(name, lineno, "index out of range");
        if (!std::isfinite(v)) fail(name, lineno, "non-finite value");
        const int r = static_cast<int>(i) - 1;
        const int c = static_cast<int>(j) - 1;
        triplets.push_back({r, c, v});
        if (symmetric_storage && r != c) triplets.push_back({c, r, v});
        ++seen;
    }

    if (!symmetric_storage) {
        // General files must already be numerically symmetric.
        std::map<std::pair<int, int>, double> acc;
        for (const Triplet& t : triplets) acc[{t.row, t.col}] += t.value;
        for (const auto& [pos, v] : acc) {
            auto it = acc.find({pos.second, pos.first});
            const double mirror = it == acc.end() ? 0.0 : it->second;
            if (pos.first < pos.second && mirror != v)
                fail(name, lineno,
                     "not symmetric: entry (" + std::to_string(pos.first + 1) + "," +
                         std::to_string(pos.second + 1) + ") has no exact mirror");
            if (pos.first > pos.second && it == acc.end())
                fail(name, lineno,
                     "not symmetric: entry (" + std::to_string(pos.first + 1) + "," +
                         std::to_string(pos.second + 1) + ") has no exact mirror");
        }
    }
    return csr_from_triplets(n, triplets);
}

CsrMatrix read_matrix_market(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open file");
    return read_matrix_market(in, path);
}

void write_matrix_market(std::ostream& out, const CsrMatrix& a) {
    out << "%%MatrixMarket matrix coordinate real general\n";
    out << a.n << " " << a.n << " " << a.nnz() << "\n";
    char buf[64];
    for (int i = 0; i < a.n; ++i) {
        auto cols = a.row_cols(i);
        auto vals = a.row_vals(i);
        for (std::size_t p = 0; p < cols.size(); ++p) {
            std::snprintf(buf, sizeof buf, "%d %d %.17g\n", i + 1, cols[p] + 1, vals[p]);
            out << buf;
        }
    }
}

void write_matrix_market(const std::string& path, const CsrMatrix& a) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open file for writing");
    write_matrix_market(out, a);
}

Permutation read_permutation(std::istream& in, int n, const std::string& name) {
    std::vector<int> p;
    p.reserve(n);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream es(line);
        long long v = 0;
        if (!(es >> v)) fail(name, lineno, "malformed permutation entry");
        if (v < 0 || v >= n) fail(name, lineno, "permutation entry out of range");
        p.push_back(static_cast<int>(v));
    }
    if (static_cast<int>(p.size()) != n)
        throw std::runtime_error(name + ": expected " + std::to_string(n) + " entries, got " +
                                 std::to_string(p.size()));
    std::vector<char> seen(n, 0);
    for (int v : p) {
        if (seen[v]) throw std::runtime_error(name + ": duplicate permutation entry " +
                                              std::to_string(v));
        seen[v] = 1;
    }
    return Permutation{std::move(p)};
}

Permutation read_permutation(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open file");
    return read_permutation(in, n, path);
}

CsrMatrix apply_ordering(const CsrMatrix& a, const Permutation& perm) {
    const int n = a.n;
    if (static_cast<int>(perm.p.size()) != n)
        throw std::invalid_argument("apply_ordering: permutation size mismatch");
    std::vector<int> pinv(n);
    for (int i = 0; i < n; ++i) pinv[perm.p[i]] = i;

    CsrMatrix b;
    b.n = n;
    b.row_ptr.assign(n + 1, 0);
    b.col_idx.resize(a.nnz());
    b.values.resize(a.nnz());
    for (int i = 0; i < n; ++i) b.row_ptr[i + 1] = b.row_ptr[i] + a.row_size(perm.p[i]);
    std::vector<std::pair<int, double>> row;
    for (int i = 0; i < n; ++i) {
        const int src = perm.p[i];
        auto cols = a.row_cols(src);
        auto vals = a.row_vals(src);
        row.clear();
        for (std::size_t q = 0; q < cols.size(); ++q) row.emplace_back(pinv[cols[q]], vals[q]);
        std::sort(row.begin(), row.end());
        std::size_t base = b.row_ptr[i];
        for (std::size_t q = 0; q < row.size(); ++q) {
            b.col_idx[base + q] = row[q].first;
            b.values[base + q] = row[q].second;
        }
    }
    return b;
}

}  // namespace inertia
