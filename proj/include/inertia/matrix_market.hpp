#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "inertia/csr.hpp"

namespace inertia {

/// Reads a Matrix Market coordinate file into a CsrMatrix.
///
/// Supported: `%%MatrixMarket matrix coordinate {real|integer|pattern}
/// {general|symmetric}` with a square size line. Symmetric storage is
/// expanded to the full pattern; pattern entries get value 1.0; general
/// files must be numerically symmetric (exact mirror equality after
/// duplicate summing) and are rejected otherwise. Indices are converted
/// from 1-based at this boundary. Errors carry the offending line number.
CsrMatrix read_matrix_market(const std::string& path);
CsrMatrix read_matrix_market(std::istream& in, const std::string& name = "<stream>");

/// Emits the full stored pattern as `coordinate real general` with 1-based
/// indices and round-trip-exact values.
void write_matrix_market(std::ostream& out, const CsrMatrix& a);
void write_matrix_market(const std::string& path, const CsrMatrix& a);

/// Symmetric reordering map: row/column i of PAP^T is row/column p[i] of A.
struct Permutation {
    std::vector<int> p;
};

/// Reads a permutation: one 0-based integer per line, exactly n lines,
/// validated to be a bijection on 0..n-1.
Permutation read_permutation(const std::string& path, int n);
Permutation read_permutation(std::istream& in, int n, const std::string& name = "<stream>");

/// Returns PAP^T.
CsrMatrix apply_ordering(const CsrMatrix& a, const Permutation& perm);

}  // namespace inertia
