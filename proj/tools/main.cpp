#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "koszul/graph.hpp"
#include "koszul/groebner.hpp"
#include "koszul/matchings.hpp"
#include "koszul/presentations.hpp"
#include "koszul/series.hpp"
#include "koszul/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace koszul;

// exit code 2 family: bad flags, bad input files, budget refusals
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SourceFlags {
    std::string family;
    int n = 0;
    std::string edges_path;
    std::string graph6;
};

void add_source_flags(CLI::App* cmd, SourceFlags& s) {
    cmd->add_option("--family", s.family,
                    "named family: empty, line, star, cycle, complete, butterfly, diamond, "
                    "triangle");
    cmd->add_option("--n", s.n, "vertex count for sized families");
    cmd->add_option("--edges", s.edges_path,
                    "edge-list file: first non-comment line n, then one \"i j\" per line");
    cmd->add_option("--graph6", s.graph6, "graph6 string");
}

Graph resolve_graph(const SourceFlags& s) {
    int provided = (s.family.empty() ? 0 : 1) + (s.edges_path.empty() ? 0 : 1) +
                   (s.graph6.empty() ? 0 : 1);
    if (provided != 1)
        throw UsageError("exactly one of --family, --edges, --graph6 is required");
    if (!s.family.empty()) {
        if (s.family == "triangle") {
            if (s.n != 0 && s.n != 3) throw UsageError("triangle is fixed at n = 3");
            return named_family("complete", 3);
        }
        try {
            return named_family(s.family, s.n);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    if (!s.edges_path.empty()) {
        std::ifstream in(s.edges_path);
        if (!in) throw UsageError("cannot open " + s.edges_path);
        try {
            return read_edge_list(in);
        } catch (const std::exception& e) {
            throw UsageError(s.edges_path + ": " + e.what());
        }
    }
    try {
        return parse_graph6(s.graph6);
    } catch (const std::exception& e) {
        throw UsageError(std::string("graph6: ") + e.what());
    }
}

// -1 when unset; positive integer otherwise
int env_budget_override() {
    const char* env = std::getenv("KOSZUL_DEGREE_BUDGET");
    if (!env || !*env) return -1;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v <= 0) throw UsageError("KOSZUL_DEGREE_BUDGET must be a positive integer");
    return static_cast<int>(v);
}

std::string join_dims(const std::vector<int64_t>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

std::vector<int64_t> series_dims(const IntSeries& p) {
    std::vector<int64_t> v;
    for (const Int& c : p.coeffs) {
        if (!c.fits_slong_p()) throw UsageError("coefficient exceeds the 64-bit output range");
        v.push_back(c.get_si());
    }
    return v;
}

ordered_json graph_json(const Graph& g) {
    ordered_json j;
    j["n"] = g.n;
    j["edges"] = ordered_json::array();
    for (auto [hi, lo] : g.edges) j["edges"].push_back({hi, lo});
    return j;
}

int run_info(const Graph& g, bool json) {
    std::vector<Triangle> tris = triangles(g);
    bool tf = is_triangle_free(g);
    bool of = !has_overlapping_triangles(g);
    if (json) {
        ordered_json j;
        j["schema_version"] = 1;
        j["command"] = "info";
        j["graph"] = graph_json(g);
        j["triangles"] = ordered_json::array();
        for (const Triangle& t : tris) j["triangles"].push_back({t.a, t.b, t.c});
        j["triangle_free"] = tf;
        j["overlap_free"] = of;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "graph: " << describe_graph(g) << "\n";
    std::cout << "vertices: " << g.n << "\n";
    std::cout << "edges: " << g.edge_count() << "\n";
    std::string ts;
    for (const Triangle& t : tris)
        ts += "(" + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c) +
              ")";
    std::cout << "triangles: " << (ts.empty() ? "none" : ts) << "\n";
    std::cout << "triangle_free: " << (tf ? "yes" : "no") << "\n";
    std::cout << "overlap_free: " << (of ? "yes" : "no") << "\n";
    return 0;
}

Presentation presentation_for(const Graph& g, const std::string& algebra) {
    if (algebra == "q") return q_presentation(g);
    if (algebra == "b") return b_presentation(g);
    if (algebra == "qdual") return quadratic_dual(q_presentation(g));
    return quadratic_dual(b_presentation(g));
}

int run_hilbert(const Graph& g, const std::string& algebra, const std::string& method, int degree,
                bool force, bool json) {
    const bool dual = algebra == "qdual" || algebra == "bdual";
    int env = env_budget_override();
    int budget = env > 0 ? env : q_degree_budget(g.n);

    IntSeries out;
    bool compared = false, agreement = false;
    std::vector<int64_t> comparison;

    if (method == "formula") {
        if (!dual) throw UsageError("formula computes the dual series; use --algebra qdual|bdual");
        int D = degree < 0 ? g.n : degree;
        if (force) {
            out = resized(hilbert_formula_raw(g), D);
            comparison = groebner_basis(presentation_for(g, algebra), std::max(2, D))
                             .dim_vector(D);
            compared = true;
            agreement = series_dims(out) == comparison;
        } else {
            out = resized(hilbert_formula(g), D);
        }
    } else if (method == "inversion") {
        if (dual) throw UsageError("inversion recovers the algebra series; use --algebra q|b");
        int D = degree < 0 ? budget : degree;
        IntSeries p = force ? hilbert_formula_raw(g) : hilbert_formula(g);
        out = invert_trunc(alternate(resized(p, D)));
        if (force) {
            if (D > budget)
                throw UsageError("degree " + std::to_string(D) + " exceeds budget " +
                                 std::to_string(budget));
            comparison = groebner_basis(presentation_for(g, algebra), std::max(2, D))
                             .dim_vector(D);
            compared = true;
            agreement = series_dims(out) == comparison;
        }
    } else if (method == "gb") {
        if (force) throw UsageError("--force pairs with formula or inversion");
        int D = degree < 0 ? budget : degree;
        if (D > budget)
            throw UsageError("degree " + std::to_string(D) + " exceeds budget " +
                             std::to_string(budget));
        out = from_dims(
            groebner_basis(presentation_for(g, algebra), std::max(2, D)).dim_vector(D));
    } else {
        throw UsageError("unknown method: " + method);
    }

    if (json) {
        ordered_json j;
        j["schema_version"] = 1;
        j["command"] = "hilbert";
        j["graph"] = graph_json(g);
        j["algebra"] = algebra;
        j["method"] = method;
        j["degree"] = out.truncation();
        j["coeffs"] = series_dims(out);
        j["series"] = render_series(out);
        if (compared) {
            j["comparison_coeffs"] = comparison;
            j["agreement"] = agreement;
        }
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "graph: " << describe_graph(g) << "\n";
    std::cout << "algebra: " << algebra << "\n";
    std::cout << "method: " << method << "\n";
    std::cout << "degree: " << out.truncation() << "\n";
    std::cout << "series: " << render_series(out) << "\n";
    std::cout << "coeffs: " << join_dims(series_dims(out)) << "\n";
    if (compared) {
        std::cout << "comparison: completion coeffs " << join_dims(comparison) << "\n";
        std::cout << "agreement: " << (agreement ? "yes" : "no") << "\n";
    }
    return 0;
}

int run_verify(const std::string& suite, int max_n, int budget_flag, bool json) {
    int env = env_budget_override();
    int override_budget = budget_flag > 0 ? budget_flag : env;

    std::vector<std::string> names;
    if (suite == "all")
        names = suite_names();
    else
        names = {suite};

    std::vector<SuiteReport> reports;
    for (const std::string& name : names) {
        int nmax = max_n > 0 ? max_n : default_max_n(name);
        reports.push_back(run_suite(name, nmax, override_budget));
    }
    bool ok = true;
    for (const SuiteReport& r : reports) ok = ok && r.all_pass();

    if (json) {
        if (reports.size() == 1) {
            std::cout << report_json(reports[0]);
        } else {
            ordered_json j;
            j["schema_version"] = 1;
            j["suites"] = ordered_json::array();
            for (const SuiteReport& r : reports)
                j["suites"].push_back(ordered_json::parse(report_json(r)));
            std::cout << j.dump(2) << "\n";
        }
    } else {
        for (const SuiteReport& r : reports) std::cout << render_report(r);
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"computer algebra for graph-associated quadratic algebras"};
    app.require_subcommand(1);

    SourceFlags info_src;
    bool info_json = false;
    CLI::App* info = app.add_subcommand("info", "graph facts and class flags");
    add_source_flags(info, info_src);
    info->add_flag("--json", info_json, "machine-readable output");

    SourceFlags hil_src;
    std::string algebra = "q", method = "gb";
    int degree = -1;
    bool hil_force = false, hil_json = false;
    CLI::App* hil = app.add_subcommand("hilbert", "dimension series by a chosen method");
    add_source_flags(hil, hil_src);
    hil->add_option("--algebra", algebra, "q, b, qdual, bdual")
        ->check(CLI::IsMember({"q", "b", "qdual", "bdual"}));
    hil->add_option("--method", method, "gb, formula, inversion")
        ->check(CLI::IsMember({"gb", "formula", "inversion"}));
    hil->add_option("--degree", degree, "output truncation degree");
    hil->add_flag("--force", hil_force,
                  "evaluate the formula outside its proven class and report agreement with the "
                  "completion");
    hil->add_flag("--json", hil_json, "machine-readable output");

    std::string suite;
    int max_n = 0, budget_flag = -1;
    bool ver_json = false;
    CLI::App* ver = app.add_subcommand("verify", "batch check suites over graph classes");
    ver->add_option("suite", suite, "dim3, gb-quadratic, koszul, palindrome, dual-match, "
                                    "frobenius, all")
        ->required()
        ->check(CLI::IsMember({"dim3", "gb-quadratic", "koszul", "palindrome", "dual-match",
                               "frobenius", "all"}));
    ver->add_option("--max-n", max_n, "largest vertex count (default per suite)");
    ver->add_option("--degree", budget_flag, "budget override for dimension runs");
    ver->add_flag("--json", ver_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(info)) return run_info(resolve_graph(info_src), info_json);
        if (app.got_subcommand(hil))
            return run_hilbert(resolve_graph(hil_src), algebra, method, degree, hil_force,
                               hil_json);
        return run_verify(suite, max_n, budget_flag, ver_json);
    } catch (const ClassViolation& e) {
        std::cerr << "class violation: " << e.what() << "\n";
        return 1;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
