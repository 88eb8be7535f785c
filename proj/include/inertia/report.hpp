#pragma once

#include <string>

#include "inertia/csr.hpp"
#include "inertia/factor.hpp"

namespace inertia {

/// One factorization run, in the shape the CLI reports it.
struct RunReport {
    std::string matrix_id;
    int n = 0;
    std::size_t nnz = 0;
    std::string variant;
    std::string ordering;
    double shift = 0.0;
    int nu = 0;
    bool singular_minor = false;
    std::int64_t interchanges = 0;
    std::int64_t flops = 0;
    std::size_t final_nnz = 0;
    std::size_t max_row_nnz = 0;
    double fill_ratio = 0.0;  // final_nnz / nnz(A)
    double wall_time_s = 0.0;
};

RunReport make_run_report(const std::string& matrix_id, const CsrMatrix& a, Variant v,
                          const std::string& ordering, double shift, const InertiaReport& rep,
                          double wall_time_s);

/// Single JSON object with every RunReport field.
std::string to_json(const RunReport& r);

}  // namespace inertia
