// loclib: construct, verify and analyze locally repairable codes with
// optimal average locality.
//
// Exit codes: 0 ok, 2 bad parameters, 3 construction class not applicable,
// 4 realization failed, 5 verification failed.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "loclib/json_io.hpp"
#include "loclib/repair.hpp"

using namespace loclib;

namespace {

constexpr int kExitBadParams = 2;
constexpr int kExitNotApplicable = 3;
constexpr int kExitRealization = 4;
constexpr int kExitVerifyFail = 5;

std::string fmt(const Rational& r) {
    std::ostringstream os;
    os << r.str();
    if (r.den() != 1) os << " (" << r.to_double() << ")";
    return os.str();
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("LOCLIB_SEED")) return std::strtoull(env, nullptr, 10);
    return 1;
}

void print_bound_report(const BoundReport& r) {
    std::cout << "parameters                 : n=" << r.n << " k=" << r.k << " d=" << r.d
              << " (J=" << r.J << ", R=" << fmt(Rational(r.k, r.n)) << ")\n";
    std::cout << "max locality bound (r >=)  : " << r.r_lb << "\n";
    std::cout << "avg locality bound, general: " << fmt(r.rbar_lb_general)
              << "   [alpha=" << fmt(r.alpha) << "]\n";
    std::cout << "gap to the max-r bound     : " << fmt(r.gap) << "\n";
    std::cout << "rate condition 4n>(n-k+1)^2: " << (r.rate_condition_holds ? "holds" : "fails")
              << "\n";
    if (r.rbar_lb_tight)
        std::cout << "avg locality bound, tight  : " << fmt(*r.rbar_lb_tight)
                  << "   [theta*=" << *r.theta_star << ", a_theta=" << *r.a_theta << "]\n";
    else
        std::cout << "avg locality bound, tight  : not applicable\n";
}

int cmd_bounds(int n, int k, int d, bool as_json) {
    BoundReport r = bound_report(n, k, d);
    if (as_json)
        std::cout << bound_report_to_json(r).dump(2) << "\n";
    else
        print_bound_report(r);
    return 0;
}

ConstructionPlan plan_for_class(int cls, int n, int k, int d) {
    switch (cls) {
        case 1: return plan_class1(n, k, d);
        case 2: return plan_class2(n, k, d);
        case 3: return plan_class3(n, k, d);
        default: throw BadParams("class must be 1, 2 or 3");
    }
}

int cmd_construct(int cls, int n, int k, int d, std::uint64_t seed, int field_m, unsigned poly,
                  int retries, const std::string& out_path) {
    ConstructionPlan plan;
    try {
        plan = plan_for_class(cls, n, k, d);
    } catch (const NotApplicable& e) {
        std::cerr << "class " << cls << " is not applicable to (" << n << "," << k << "," << d
                  << "): " << e.what() << "\n";
        std::set<int> ok = applicability(n, k, d);
        std::cerr << "applicable classes:";
        if (ok.empty()) std::cerr << " none (emit bounds instead)";
        for (int c : ok) std::cerr << " " << c;
        std::cerr << "\n";
        return kExitNotApplicable;
    }

    RealizationConfig cfg{make_field(field_m, poly), seed, retries};
    LinearCode code = realize(plan, cfg);  // RealizationFailed handled in main

    LocalityProfile profile = locality_profile(code);
    std::cout << "class " << cls << " (" << n << "," << k << "," << d << ") over GF(2^" << field_m
              << "), seed " << seed << "\n";
    std::cout << "local groups:";
    for (const auto& g : plan.local_groups) std::cout << " " << g.size();
    std::cout << "  global checks: " << plan.global_checks << "\n";
    std::cout << "verified min distance      : " << min_distance(code.parity_check()) << "\n";
    std::cout << "locality r / r-bar         : " << profile.r_max << " / " << fmt(profile.r_avg)
              << "\n";
    Rational bound = cls == 3 ? avg_locality_lb_tight(n, k, d).bound
                              : avg_locality_lb_general(n, k, d);
    std::cout << "meets the class bound      : " << (profile.r_avg == bound ? "yes" : "NO") << " ("
              << fmt(bound) << ")\n";

    if (!out_path.empty()) {
        CodeFileMeta meta;
        meta.class_id = cls;
        meta.seed = seed;
        if (cls == 3) meta.theta_star = plan.theta_star;
        save_code_file(make_code_file(code, plan_to_tanner(plan), meta), out_path);
        std::cout << "wrote " << out_path << "\n";
    }
    return 0;
}

struct VerifyContext {
    int passed = 0;
    int failed = 0;

    void check(const std::string& name, bool ok, const std::string& detail = "") {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << name;
        if (!detail.empty()) std::cout << ": " << detail;
        std::cout << "\n";
        (ok ? passed : failed)++;
    }
};

int cmd_verify(const std::string& path) {
    CodeFile file = load_code_file(path);
    const CodeParams& p = file.params;
    VerifyContext v;

    FieldMatrix h = rows_to_matrix(file.field, file.h);
    v.check("H shape", h.rows() == p.n - p.k && h.cols() == p.n);
    v.check("rank(H) = n-k", rank(h) == p.n - p.k);

    std::optional<LinearCode> code;
    bool matrices_ok = rank(h) == p.n - p.k && distance_at_least(h, p.d);
    if (file.g) {
        FieldMatrix g = rows_to_matrix(file.field, *file.g);
        bool ortho = true;
        FieldMatrix product = matmul(g, transpose(h));
        for (int i = 0; i < product.rows(); i++)
            for (int j = 0; j < product.cols(); j++) ortho = ortho && product.at(i, j) == 0;
        v.check("G*H^T = 0", ortho);
        v.check("rank(G) = k", rank(g) == p.k);
        if (ortho && rank(g) == p.k && matrices_ok) code.emplace(p, g, h);
    } else if (matrices_ok) {
        code.emplace(LinearCode::from_parity_check(p, h));
    }

    int dist = min_distance(h);
    v.check("min distance >= declared d", dist >= p.d,
            "computed " + std::to_string(dist) + ", declared " + std::to_string(p.d));
    if (dist < p.d) {
        auto witness = find_dependent_columns(h, p.d - 1);
        if (witness) {
            std::ostringstream os;
            os << "dependent columns:";
            for (int c : *witness) os << " " << c;
            std::cout << "       " << os.str() << "\n";
        }
    }

    if (code) {
        LocalityProfile profile = locality_profile(*code);
        std::cout << "locality r / r-bar: " << profile.r_max << " / " << fmt(profile.r_avg)
                  << "\n";
        v.check("r-bar >= general bound", profile.r_avg >= avg_locality_lb_general(p.n, p.k, p.d),
                fmt(avg_locality_lb_general(p.n, p.k, p.d)));
        v.check("r >= max-locality bound", profile.r_max >= max_locality_lb(p.n, p.k, p.d));
        if (rate_condition(p.n, p.k)) {
            Rational tight = avg_locality_lb_tight(p.n, p.k, p.d).bound;
            v.check("r-bar >= tight bound", profile.r_avg >= tight, fmt(tight));
            if (profile.r_avg == tight)
                std::cout << "       r-bar meets the tight bound with equality\n";
            if (file.meta.class_id && *file.meta.class_id == 3)
                v.check("class-3 equality r-bar = tight bound", profile.r_avg == tight);
        }
        if (file.tanner) {
            ValidationResult tv = validate_locality_tanner(*file.tanner, *code);
            v.check("locality Tanner graph valid", tv.ok);
            for (const std::string& dmsg : tv.diagnostics) std::cout << "       " << dmsg << "\n";
            try {
                CoverageResult cov = coverage_check(*file.tanner, p.k, p.d);
                v.check("J-subset coverage", cov.ok);
            } catch (const HypothesisViolated&) {
                CoverageResult cov = coverage_sweep(*file.tanner, p.k, p.d);
                v.check("gamma coverage sweep", cov.ok);
            }
        }
    } else {
        v.check("matrices form a consistent code", false);
    }

    std::cout << "verify: " << (v.failed == 0 ? "PASS" : "FAIL") << " (" << v.passed << "/"
              << v.passed + v.failed << ")\n";
    return v.failed == 0 ? 0 : kExitVerifyFail;
}

int cmd_locality(const std::string& path) {
    CodeFile file = load_code_file(path);
    LinearCode code = code_from_file(file);
    LocalityProfile profile = locality_profile(code);

    std::cout << "symbol  locality  min repair set\n";
    for (int i = 0; i < code.params().n; i++) {
        std::vector<int> helpers = min_repair_set(code.parity_check(), code.params().k, i);
        std::cout << std::setw(6) << i << std::setw(10) << profile.loc[i] << "  ";
        for (int l : helpers) std::cout << l << " ";
        std::cout << "\n";
    }
    std::cout << "r = " << profile.r_max << ", r-bar = " << fmt(profile.r_avg) << "\n";
    return 0;
}

int cmd_repair(const std::string& path, long long node_capacity, long long block_size,
               const std::string& csv_path) {
    CodeFile file = load_code_file(path);
    LinearCode code = code_from_file(file);
    NodeFailureStats stats = node_failure_stats(code, {node_capacity, block_size});

    std::ostream* out = &std::cout;
    std::ofstream csv;
    if (!csv_path.empty()) {
        csv.open(csv_path);
        if (!csv) throw Error("cannot open " + csv_path);
        out = &csv;
    }
    *out << "index,locality,helpers\n";
    for (const RepairReport& r : stats.per_symbol) {
        *out << r.failed_index << "," << r.symbols_downloaded << ",";
        for (size_t j = 0; j < r.helpers.size(); j++)
            *out << (j ? " " : "") << r.helpers[j];
        *out << "\n";
    }
    *out << "summary,r=" << stats.r_max << ",rbar=" << stats.avg_symbols_per_block.str()
         << ",bandwidth=" << stats.bandwidth.str() << "\n";
    if (!csv_path.empty())
        std::cout << "wrote " << csv_path << "\n";
    std::cout << "node capacity " << node_capacity << ", block size " << block_size << ": "
              << fmt(stats.blocks_per_node) << " blocks per node\n";
    std::cout << "repair bandwidth per failed node: " << fmt(stats.bandwidth) << " units (r-bar "
              << fmt(stats.avg_symbols_per_block) << ")\n";
    return 0;
}

int cmd_export_g0(const std::string& out_path, const std::string& csv_path) {
    LinearCode code = embedded_g0();

    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) throw Error("cannot open " + csv_path);
        for (const auto& row : g0_transpose_rows()) {
            for (size_t j = 0; j < row.size(); j++) csv << (j ? "," : "") << row[j];
            csv << "\n";
        }
        std::cout << "wrote " << csv_path << "\n";
    }
    if (!out_path.empty()) {
        // Reconstruct the locality Tanner graph from the greedy groups: each
        // minimum repair group becomes a local check, globals fill up to n-k.
        LocalGroupPartition part = build_local_groups(code);
        TannerGraph graph;
        graph.n = code.params().n;
        for (int j = 0; j < part.group_count(); j++) {
            std::vector<int> full = min_repair_set(code.parity_check(), code.params().k,
                                                   part.groups[j][0]);
            full.push_back(part.groups[j][0]);
            std::sort(full.begin(), full.end());
            graph.checks.push_back({full, true});
        }
        std::vector<int> all(graph.n);
        for (int i = 0; i < graph.n; i++) all[i] = i;
        int globals = code.params().n - code.params().k - part.group_count();
        for (int c = 0; c < globals; c++) graph.checks.push_back({all, false});

        CodeFileMeta meta;
        meta.class_id = 3;
        meta.theta_star = 3;
        save_code_file(make_code_file(code, graph, meta), out_path);
        std::cout << "wrote " << out_path << "\n";
    }

    LocalityProfile profile = locality_profile(code);
    std::cout << "(16,10,5) embedded code: d = " << min_distance(code.parity_check())
              << ", r = " << profile.r_max << ", r-bar = " << fmt(profile.r_avg) << "\n";
    std::cout << "improvement over the r-bar = 5 baseline: "
              << fmt(improvement_ratio(Rational(5), profile.r_avg) * Rational(100)) << " %\n";
    return 0;
}

int cmd_sweep(const std::string& n_range, int d, const std::string& csv_path) {
    int n_lo, n_hi;
    if (auto colon = n_range.find(':'); colon != std::string::npos) {
        n_lo = std::stoi(n_range.substr(0, colon));
        n_hi = std::stoi(n_range.substr(colon + 1));
    } else {
        n_lo = n_hi = std::stoi(n_range);
    }
    if (n_lo < 2 || n_hi < n_lo) throw BadParams("bad n range");

    std::ostream* out = &std::cout;
    std::ofstream csv;
    if (!csv_path.empty()) {
        csv.open(csv_path);
        if (!csv) throw Error("cannot open " + csv_path);
        out = &csv;
    }
    *out << "n,k,d,J,r_lb,rbar_general,rbar_general_decimal,rate_ok,"
            "rbar_tight,rbar_tight_decimal,theta_star,gap\n";
    for (int n = n_lo; n <= n_hi; n++)
        for (int k = 1; k <= n - d + 1 && k < n; k++) {
            BoundReport r = bound_report(n, k, d);
            *out << n << "," << k << "," << d << "," << r.J << "," << r.r_lb << ","
                 << r.rbar_lb_general.str() << "," << r.rbar_lb_general.to_double() << ","
                 << (r.rate_condition_holds ? 1 : 0) << ",";
            if (r.rbar_lb_tight)
                *out << r.rbar_lb_tight->str() << "," << r.rbar_lb_tight->to_double() << ","
                     << *r.theta_star;
            else
                *out << ",,";
            *out << "," << r.gap.str() << "\n";
        }
    if (!csv_path.empty()) std::cout << "wrote " << csv_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"locally repairable codes with optimal average locality"};
    app.require_subcommand(1);

    int n = 0, k = 0, d = 0, cls = 0;
    std::uint64_t seed = default_seed();
    int field_m = kDefaultFieldM;
    unsigned poly = kDefaultFieldPoly;
    int retries = 200;
    bool as_json = false;
    std::string path, out_path, csv_path, n_range;
    long long node_capacity = 1, block_size = 1;

    CLI::App* bounds = app.add_subcommand("bounds", "print locality bounds for (n,k,d)");
    bounds->add_option("n", n)->required();
    bounds->add_option("k", k)->required();
    bounds->add_option("d", d)->required();
    bounds->add_flag("--json", as_json, "emit JSON instead of the table");

    CLI::App* construct = app.add_subcommand("construct", "build an average-locality-optimal LRC");
    construct->add_option("class", cls, "construction class (1, 2 or 3)")->required();
    construct->add_option("n", n)->required();
    construct->add_option("k", k)->required();
    construct->add_option("d", d)->required();
    construct->add_option("--seed", seed, "coefficient seed (default: $LOCLIB_SEED or 1)");
    construct->add_option("--field-m", field_m, "field extension degree (default 8)");
    construct->add_option("--poly", poly, "primitive polynomial bitmask (default 285)");
    construct->add_option("--retries", retries, "realization attempts (default 200)");
    construct->add_option("--out", out_path, "write the code file here");

    CLI::App* verify = app.add_subcommand("verify", "re-check every invariant of a code file");
    verify->add_option("file", path)->required();

    CLI::App* locality = app.add_subcommand(
        "locality", "per-symbol locality table (subset search; n <= ~20 advised)");
    locality->add_option("file", path)->required();

    CLI::App* repair = app.add_subcommand("repair", "node repair cost statistics");
    repair->add_option("file", path)->required();
    repair->add_option("--node-capacity", node_capacity, "node size in capacity units")
        ->required();
    repair->add_option("--block-size", block_size, "block size in capacity units");
    repair->add_option("--csv", csv_path, "write the per-symbol table here");

    CLI::App* export_g0 = app.add_subcommand("export-g0", "emit the embedded (16,10,5) code");
    export_g0->add_option("--out", out_path, "write the code file here");
    export_g0->add_option("--csv", csv_path, "write the generator transpose as CSV");

    CLI::App* sweep = app.add_subcommand("sweep", "bound curves over k for fixed d");
    sweep->add_option("n", n_range, "code length, or a lo:hi range")->required();
    sweep->add_option("d", d)->required();
    sweep->add_option("--csv", csv_path, "write rows here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bounds->parsed()) return cmd_bounds(n, k, d, as_json);
        if (construct->parsed())
            return cmd_construct(cls, n, k, d, seed, field_m, poly, retries, out_path);
        if (verify->parsed()) return cmd_verify(path);
        if (locality->parsed()) return cmd_locality(path);
        if (repair->parsed()) return cmd_repair(path, node_capacity, block_size, csv_path);
        if (export_g0->parsed()) return cmd_export_g0(out_path, csv_path);
        if (sweep->parsed()) return cmd_sweep(n_range, d, csv_path);
    } catch (const RealizationFailed& e) {
        std::cerr << "realization failed: " << e.what() << "\n";
        return kExitRealization;
    } catch (const NotApplicable& e) {
        std::cerr << "not applicable: " << e.what() << "\n";
        return kExitNotApplicable;
    } catch (const BadParams& e) {
        std::cerr << "bad parameters: " << e.what() << "\n";
        return kExitBadParams;
    } catch (const BadDegree& e) {
        std::cerr << "bad field: " << e.what() << "\n";
        return kExitBadParams;
    } catch (const NonPrimitivePolynomial& e) {
        std::cerr << "bad field: " << e.what() << "\n";
        return kExitBadParams;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    } catch (const std::exception& e) {  // malformed JSON and friends
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadParams;
    }
    return 0;
}
