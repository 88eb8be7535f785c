#include "inertia/report.hpp"

#include <json.hpp>

namespace inertia {

RunReport make_run_report(const std::string& matrix_id, const CsrMatrix& a, Variant v,
                          const std::string& ordering, double shift, const InertiaReport& rep,
                          double wall_time_s) {
    RunReport r;
    r.matrix_id = matrix_id;
    r.n = a.n;
    r.nnz = a.nnz();
    r.variant = variant_name(v);
    r.ordering = ordering;
    r.shift = shift;
    r.nu = rep.nu;
    r.singular_minor = rep.singular_minor;
    r.interchanges = rep.interchanges;
    r.flops = rep.flops;
    r.final_nnz = rep.final_nnz;
    r.max_row_nnz = rep.max_row_nnz;
    r.fill_ratio = a.nnz() == 0 ? 0.0 : static_cast<double>(rep.final_nnz) / a.nnz();
    r.wall_time_s = wall_time_s;
    return r;
}

std::string to_json(const RunReport& r) {
    nlohmann::json j{{"matrix", r.matrix_id},
                     {"n", r.n},
                     {"nnz", r.nnz},
                     {"variant", r.variant},
                     {"ordering", r.ordering},
                     {"shift", r.shift},
                     {"nu", r.nu},
                     {"singular_minor", r.singular_minor},
                     {"interchanges", r.interchanges},
                     {"flops", r.flops},
                     {"final_nnz", r.final_nnz},
                     {"max_row_nnz", r.max_row_nnz},
                     {"fill_ratio", r.fill_ratio},
                     {"wall_time_s", r.wall_time_s}};
    return j.dump();
}

}  // namespace inertia
