// Command-line driver: inertia, eigenvalue, and fill statistics for sparse
// symmetric matrices in Matrix Market coordinate format.
//
// Exit codes: 0 success, 1 usage error, 2 input error, 3 results printed but
// a numerical warning (singular minor) was encountered.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "inertia/csr.hpp"
#include "inertia/eig.hpp"
#include "inertia/factor.hpp"
#include "inertia/matrix_market.hpp"
#include "inertia/oracle.hpp"
#include "inertia/report.hpp"
#include "inertia/symbolic.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitNumericalWarning = 3;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct MatrixOptions {
    std::string file;
    std::string perm_file;
    std::string variant_name = "elementary";

    inertia::Variant variant() const {
        return variant_name == "givens" ? inertia::Variant::givens
                                        : inertia::Variant::elementary;
    }
    std::string ordering_name() const {
        return perm_file.empty() ? "natural"
                                 : std::filesystem::path(perm_file).filename().string();
    }
    std::string matrix_id() const { return std::filesystem::path(file).filename().string(); }

    inertia::CsrMatrix load() const {
        inertia::CsrMatrix a = inertia::read_matrix_market(file);
        if (!perm_file.empty()) {
            inertia::Permutation p = inertia::read_permutation(perm_file, a.n);
            a = inertia::apply_ordering(a, p);
        }
        return a;
    }
};

void add_matrix_options(CLI::App* cmd, MatrixOptions& opt, bool with_variant = true) {
    cmd->add_option("file", opt.file, "Matrix Market file")->required();
    cmd->add_option("--perm", opt.perm_file, "permutation file (one 0-based index per line)");
    if (with_variant)
        cmd->add_option("--variant", opt.variant_name, "factorization variant")
            ->check(CLI::IsMember({"elementary", "givens"}))
            ->capture_default_str();
}

int run_inertia(const MatrixOptions& opt, double shift, bool json) {
    auto start = Clock::now();
    inertia::CsrMatrix a = opt.load();
    inertia::CsrMatrix work = shift != 0.0 ? inertia::shifted(a, shift) : a;
    inertia::RowCounts counts = inertia::r_row_counts(work, inertia::col_etree(work));
    inertia::InertiaReport rep = inertia::negative_index(work, opt.variant(), counts);
    inertia::RunReport rr = inertia::make_run_report(opt.matrix_id(), a, opt.variant(),
                                                     opt.ordering_name(), shift, rep,
                                                     seconds_since(start));
    if (json) {
        std::cout << inertia::to_json(rr) << "\n";
    } else {
        std::cout << "matrix       " << rr.matrix_id << " (n=" << rr.n << ", nnz=" << rr.nnz
                  << ", ordering=" << rr.ordering << ")\n"
                  << "variant      " << rr.variant << "\n"
                  << "shift        " << format_value(rr.shift) << "\n"
                  << "nu           " << rr.nu << "\n"
                  << "singular     " << (rr.singular_minor ? "yes" : "no") << "\n"
                  << "interchanges " << rr.interchanges << "\n"
                  << "flops        " << rr.flops << "\n"
                  << "final_nnz    " << rr.final_nnz << " (fill " << rr.fill_ratio << ")\n"
                  << "max_row_nnz  " << rr.max_row_nnz << "\n"
                  << "time         " << rr.wall_time_s << " s\n";
        if (rr.singular_minor)
            std::cout << "warning: singular leading minor encountered; nu is unreliable\n";
    }
    return rep.singular_minor ? kExitNumericalWarning : kExitOk;
}

struct EigSelection {
    bool all = false;
    std::vector<double> interval;
    std::vector<int> ordinals;
};

int run_eig(const MatrixOptions& opt, const EigSelection& sel, double tau, bool json, bool csv) {
    auto start = Clock::now();
    inertia::CsrMatrix a = opt.load();
    inertia::BisectionParams params;
    params.tau = tau;
    params.variant = opt.variant();

    inertia::EigResult res;
    std::string mode = "all";
    if (!sel.interval.empty()) {
        mode = "interval";
        res = inertia::eig_in_interval(a, params, sel.interval[0], sel.interval[1]);
    } else if (!sel.ordinals.empty()) {
        mode = "ordinals";
        res = inertia::eig_by_ordinal(a, params, sel.ordinals[0], sel.ordinals[1]);
    } else {
        res = inertia::eig_all(a, params);
    }
    const double elapsed = seconds_since(start);
    const bool warn =
        res.singular_retries > 0 || res.retry_budget_exhausted || res.endpoint_singular;

    if (json) {
        nlohmann::json j{{"matrix", opt.matrix_id()},
                         {"n", a.n},
                         {"variant", inertia::variant_name(params.variant)},
                         {"ordering", opt.ordering_name()},
                         {"mode", mode},
                         {"tau", params.tau},
                         {"values", res.values},
                         {"inertia_evals", res.inertia_evals},
                         {"singular_retries", res.singular_retries},
                         {"retry_budget_exhausted", res.retry_budget_exhausted},
                         {"wall_time_s", elapsed}};
        std::cout << j.dump() << "\n";
    } else if (csv) {
        std::cout << "index,value\n";
        for (std::size_t i = 0; i < res.values.size(); ++i)
            std::cout << i + 1 << "," << format_value(res.values[i]) << "\n";
    } else {
        for (double v : res.values) std::cout << format_value(v) << "\n";
        std::cerr << "# " << res.values.size() << " eigenvalue(s), " << res.inertia_evals
                  << " inertia evaluation(s), " << elapsed << " s\n";
        if (warn) std::cerr << "# warning: singular minors encountered during bisection\n";
    }
    return warn ? kExitNumericalWarning : kExitOk;
}

int run_count(const MatrixOptions& opt, double x0, double x1, bool json) {
    inertia::CsrMatrix a = opt.load();
    inertia::IntervalCount c = inertia::count_in_interval(a, opt.variant(), x0, x1);
    if (json) {
        nlohmann::json j{{"matrix", opt.matrix_id()},
                         {"x0", x0},
                         {"x1", x1},
                         {"variant", inertia::variant_name(opt.variant())},
                         {"count", c.count},
                         {"singular_warning", c.singular_warning}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << c.count << "\n";
        if (c.singular_warning)
            std::cerr << "# warning: singular minor at an endpoint; count is unreliable\n";
    }
    return c.singular_warning ? kExitNumericalWarning : kExitOk;
}

int run_stats(const MatrixOptions& opt, bool json) {
    inertia::CsrMatrix a = opt.load();
    inertia::RowCounts counts = inertia::r_row_counts(a, inertia::col_etree(a));
    std::int64_t predicted = 0;
    for (int c : counts.counts) predicted += c;

    auto run_one = [&](inertia::Variant v) {
        auto start = Clock::now();
        inertia::InertiaReport rep = inertia::negative_index(a, v, counts);
        return inertia::make_run_report(opt.matrix_id(), a, v, opt.ordering_name(), 0.0, rep,
                                        seconds_since(start));
    };
    inertia::RunReport elem = run_one(inertia::Variant::elementary);
    inertia::RunReport giv = run_one(inertia::Variant::givens);
    const double predicted_fill = a.nnz() == 0 ? 0.0 : static_cast<double>(predicted) / a.nnz();

    if (json) {
        nlohmann::json j{{"matrix", opt.matrix_id()},
                         {"n", a.n},
                         {"nnz", a.nnz()},
                         {"ordering", opt.ordering_name()},
                         {"predicted_r_nnz", predicted},
                         {"predicted_fill_ratio", predicted_fill},
                         {"elementary", nlohmann::json::parse(inertia::to_json(elem))},
                         {"givens", nlohmann::json::parse(inertia::to_json(giv))}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "matrix " << opt.matrix_id() << " (n=" << a.n << ", nnz=" << a.nnz()
                  << ", ordering=" << opt.ordering_name() << ")\n"
                  << "predicted R nnz " << predicted << " (fill " << predicted_fill << ")\n";
        auto print = [](const inertia::RunReport& r) {
            std::cout << r.variant << ": nu=" << r.nu
                      << " singular=" << (r.singular_minor ? "yes" : "no")
                      << " interchanges=" << r.interchanges << " flops=" << r.flops
                      << " final_nnz=" << r.final_nnz << " fill=" << r.fill_ratio
                      << " time=" << r.wall_time_s << "s\n";
        };
        print(elem);
        print(giv);
    }
    return (elem.singular_minor || giv.singular_minor) ? kExitNumericalWarning : kExitOk;
}

int run_demo_instability(int n, std::uint64_t seed, bool json) {
    if (n < 2 || n % 2 != 0) {
        std::cerr << "demo-instability: --n must be even and >= 2\n";
        return kExitInput;
    }
    inertia::DenseSym a = inertia::instability_example(n, seed);
    std::vector<double> ev = inertia::jacobi_eigenvalues(a);
    int jacobi_nu = 0;
    double ev_min = std::abs(ev.front()), ev_max = 0.0;
    for (double v : ev) {
        if (v < 0.0) ++jacobi_nu;
        ev_min = std::min(ev_min, std::abs(v));
        ev_max = std::max(ev_max, std::abs(v));
    }
    const double kappa = ev_min == 0.0 ? std::numeric_limits<double>::infinity() : ev_max / ev_min;

    inertia::CsrMatrix sparse = inertia::to_csr(a);
    inertia::RowCounts counts = inertia::r_row_counts(sparse, inertia::col_etree(sparse));
    inertia::InertiaReport elem =
        inertia::negative_index(sparse, inertia::Variant::elementary, counts);
    inertia::InertiaReport giv = inertia::negative_index(sparse, inertia::Variant::givens, counts);
    const bool discrepancy = elem.nu != jacobi_nu || giv.nu != jacobi_nu;

    if (json) {
        nlohmann::json j{{"n", n},
                         {"seed", seed},
                         {"kappa_estimate", kappa},
                         {"jacobi_nu", jacobi_nu},
                         {"elementary_nu", elem.nu},
                         {"givens_nu", giv.nu},
                         {"elementary_singular", elem.singular_minor},
                         {"givens_singular", giv.singular_minor},
                         {"discrepancy", discrepancy}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "n              " << n << " (seed " << seed << ")\n"
                  << "kappa estimate " << format_value(kappa) << "\n"
                  << "jacobi nu      " << jacobi_nu << " (expected n/2 = " << n / 2 << ")\n"
                  << "elementary nu  " << elem.nu
                  << (elem.singular_minor ? "  [singular minors]" : "") << "\n"
                  << "givens nu      " << giv.nu
                  << (giv.singular_minor ? "  [singular minors]" : "") << "\n";
        std::cout << (discrepancy
                          ? "discrepancy: yes (factorized nu differs from the stable reference)\n"
                          : "discrepancy: no\n");
    }
    return (elem.singular_minor || giv.singular_minor) ? kExitNumericalWarning : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Inertia and bisection eigensolver for sparse symmetric matrices"};
    app.require_subcommand(1);

    MatrixOptions inertia_opt;
    double shift = 0.0;
    bool inertia_json = false;
    CLI::App* cmd_inertia =
        app.add_subcommand("inertia", "negative index of inertia of A (or A - shift*I)");
    add_matrix_options(cmd_inertia, inertia_opt);
    cmd_inertia->add_option("--shift", shift, "compute nu(A - shift*I)");
    cmd_inertia->add_flag("--json", inertia_json, "machine-readable output");

    MatrixOptions eig_opt;
    EigSelection sel;
    double tau = 0x1.0p-52;
    bool eig_json = false, eig_csv = false;
    CLI::App* cmd_eig = app.add_subcommand("eig", "eigenvalues by bisection");
    add_matrix_options(cmd_eig, eig_opt);
    CLI::Option* o_all = cmd_eig->add_flag("--all", sel.all, "all eigenvalues (default)");
    CLI::Option* o_int = cmd_eig->add_option("--interval", sel.interval,
                                             "eigenvalues in the half-open interval [a, b)")
                             ->expected(2);
    CLI::Option* o_ord =
        cmd_eig->add_option("--ordinals", sel.ordinals, "eigenvalues lo..hi by 1-based ordinal")
            ->expected(2);
    o_all->excludes(o_int)->excludes(o_ord);
    o_int->excludes(o_ord);
    cmd_eig->add_option("--tau", tau, "relative accuracy")->capture_default_str();
    CLI::Option* o_json = cmd_eig->add_flag("--json", eig_json, "JSON output");
    cmd_eig->add_flag("--csv", eig_csv, "CSV output")->excludes(o_json);

    MatrixOptions count_opt;
    std::vector<double> count_interval;
    bool count_json = false;
    CLI::App* cmd_count = app.add_subcommand("count", "count eigenvalues in [a, b)");
    add_matrix_options(cmd_count, count_opt);
    cmd_count->add_option("--interval", count_interval, "interval [a, b)")
        ->expected(2)
        ->required();
    cmd_count->add_flag("--json", count_json, "JSON output");

    MatrixOptions stats_opt;
    bool stats_json = false;
    CLI::App* cmd_stats =
        app.add_subcommand("stats", "both variants' reports plus predicted vs actual fill");
    add_matrix_options(cmd_stats, stats_opt, false);
    cmd_stats->add_flag("--json", stats_json, "JSON output");

    int demo_n = 2048;
    std::uint64_t demo_seed = 1;
    bool demo_json = false;
    CLI::App* cmd_demo =
        app.add_subcommand("demo-instability", "near-singular leading-minor stress example");
    cmd_demo->add_option("--n", demo_n, "even dimension")->capture_default_str();
    cmd_demo->add_option("--seed", demo_seed, "random seed")->capture_default_str();
    cmd_demo->add_flag("--json", demo_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_inertia->parsed()) return run_inertia(inertia_opt, shift, inertia_json);
        if (cmd_eig->parsed()) return run_eig(eig_opt, sel, tau, eig_json, eig_csv);
        if (cmd_count->parsed())
            return run_count(count_opt, count_interval[0], count_interval[1], count_json);
        if (cmd_stats->parsed()) return run_stats(stats_opt, stats_json);
        if (cmd_demo->parsed()) return run_demo_instability(demo_n, demo_seed, demo_json);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitUsage;
}
