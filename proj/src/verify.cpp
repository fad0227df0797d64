#include "koszul/verify.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "koszul/exterior.hpp"
#include "koszul/groebner.hpp"
#include "koszul/matchings.hpp"
#include "koszul/presentations.hpp"
#include "koszul/series.hpp"

namespace koszul {

namespace {

std::vector<Graph> admissible_class(int max_n) {
    std::vector<Graph> out;
    for (Graph& g : enumerate_graphs(max_n, true))
        if (!has_overlapping_triangles(g)) out.push_back(std::move(g));
    return out;
}

std::string join_dims(const std::vector<int64_t>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

std::string join_coeffs(const IntSeries& p) {
    std::string s;
    for (int d = 0; d <= p.truncation(); ++d) {
        if (d) s += ",";
        s += p.coeffs[static_cast<size_t>(d)].get_str();
    }
    return s;
}

std::vector<int64_t> basis_counts(const Graph& g, int max_degree) {
    std::vector<int64_t> counts;
    for (int d = 0; d <= max_degree; ++d)
        counts.push_back(static_cast<int64_t>(qdual_basis(g, d).size()));
    return counts;
}

}  // namespace

int q_degree_budget(int n) {
    if (n <= 4) return 6;
    if (n == 5) return 4;
    return 3;
}

int SuiteReport::failure_count() const {
    int k = 0;
    for (const CheckRow& r : rows) k += r.pass ? 0 : 1;
    return k;
}

std::string describe_graph(const Graph& g) {
    std::string s = "n=" + std::to_string(g.n) + "; edges=";
    if (g.edges.empty()) return s + "none";
    for (auto [hi, lo] : g.edges)
        s += "(" + std::to_string(hi) + "," + std::to_string(lo) + ")";
    return s;
}

SuiteReport verify_dim3(int max_n) {
    SuiteReport rep{"dim3", max_n, 0, {}};
    for (const Graph& g : enumerate_graphs(max_n, true)) {
        ++rep.graph_count;
        Presentation q = q_presentation(g);
        Presentation b = b_presentation(g);
        int64_t q3 = groebner_basis(q, 3).dim_vector(3)[3];
        int64_t b3 = groebner_basis(b, 3).dim_vector(3)[3];
        int64_t oq3 = dims_by_rank(q, 3)[3];
        int64_t ob3 = dims_by_rank(b, 3)[3];
        bool pass = q3 == b3 && oq3 == q3 && ob3 == b3;
        std::string detail = "completion: q=" + std::to_string(q3) + " b=" + std::to_string(b3) +
                             "; rank oracle: q=" + std::to_string(oq3) +
                             " b=" + std::to_string(ob3);
        rep.rows.push_back({describe_graph(g),
                            "degree-3 dimensions agree [completion bound 3 vs rank oracle]", pass,
                            detail});
    }
    return rep;
}

SuiteReport verify_gb_quadratic(int max_n) {
    SuiteReport rep{"gb-quadratic", max_n, 0, {}};
    for (const Graph& g : admissible_class(max_n)) {
        ++rep.graph_count;
        Alphabet a = Alphabet::dual(g);
        for (int variant = 0; variant < 2; ++variant) {
            MonomialOrder ord = variant == 0 ? MonomialOrder::deglex_default(a)
                                             : MonomialOrder::deglex_reverse_edges(a);
            const char* name = variant == 0 ? "default precedence" : "reverse-edge precedence";
            ExteriorSpace s(a, ord);
            ExteriorGB gb(exterior_dual_relations(g, s), g.n + 1);
            bool quad = gb.is_quadratic();
            bool sets = gb.quadratic_leading_masks() == expected_leading_masks(g, s);
            std::string detail = "bound " + std::to_string(g.n + 1) + "; basis size " +
                                 std::to_string(gb.basis().size()) +
                                 (quad ? "; quadratic" : "; has higher-degree elements") +
                                 (sets ? "; leading sets as predicted" : "; leading sets differ");
            rep.rows.push_back({describe_graph(g),
                                std::string("flat-dual completion quadratic with predicted "
                                            "leading sets [") +
                                    name + "]",
                                quad && sets, detail});
        }
    }
    return rep;
}

SuiteReport verify_koszul(int max_n, int budget_override) {
    SuiteReport rep{"koszul", max_n, 0, {}};
    for (const Graph& g : admissible_class(max_n)) {
        ++rep.graph_count;
        const int n = g.n;
        const std::string graph = describe_graph(g);
        IntSeries p = hilbert_formula(g);

        Alphabet a = Alphabet::dual(g);
        ExteriorSpace s(a, MonomialOrder::deglex_default(a));
        ExteriorGB egb(exterior_dual_relations(g, s), n);
        std::vector<int64_t> flat_dims = egb.dim_vector(s.dimension(), n);
        std::vector<int64_t> deformed_dims =
            groebner_basis(quadratic_dual(q_presentation(g)), n).dim_vector(n);
        std::vector<int64_t> counts = basis_counts(g, n);

        bool four = from_dims(flat_dims) == p && from_dims(deformed_dims) == p &&
                    from_dims(counts) == p;
        std::string detail4 = four ? "degree 0.." + std::to_string(n) + ": " + join_coeffs(p)
                                   : "formula " + join_coeffs(p) + "; flat-dual " +
                                         join_dims(flat_dims) + "; deformed-dual " +
                                         join_dims(deformed_dims) + "; basis " + join_dims(counts);
        rep.rows.push_back({graph,
                            "dual series four ways [formula, flat-dual completion, deformed-dual "
                            "completion, basis enumeration]",
                            four, detail4});

        int budget = budget_override > 0 ? budget_override : q_degree_budget(n);
        std::vector<int64_t> hq = groebner_basis(q_presentation(g), budget).dim_vector(budget);
        bool numeric = koszul_numeric_check(from_dims(hq), resized(p, budget));
        rep.rows.push_back({graph, "numeric product is 1 [deformed completion vs formula]",
                            numeric,
                            "degree 0.." + std::to_string(budget) + "; dims " + join_dims(hq)});

        bool top = global_dimension(p) == n && p.coeffs[static_cast<size_t>(n)] == 1;
        rep.rows.push_back({graph, "dual series degree and top coefficient [formula]", top,
                            "deg p = " + std::to_string(global_dimension(p)) + "; p_n = " +
                                p.coeffs[static_cast<size_t>(n)].get_str()});
    }
    return rep;
}

SuiteReport verify_palindrome(int max_n) {
    SuiteReport rep{"palindrome", max_n, 0, {}};
    for (const Graph& g : admissible_class(max_n)) {
        ++rep.graph_count;
        IntSeries p = hilbert_formula(g);
        PalindromeReport pal = palindrome_report(p, g.n);
        bool tf = is_triangle_free(g);
        bool pass = pal.inequalities_hold && pal.is_palindrome == tf;
        std::string detail = std::string("palindrome=") + (pal.is_palindrome ? "yes" : "no") +
                             "; triangle-free=" + (tf ? "yes" : "no") + "; inequalities=" +
                             (pal.inequalities_hold ? "hold" : "violated") + "; p=" +
                             join_coeffs(p);
        rep.rows.push_back(
            {describe_graph(g), "palindrome iff triangle-free; upper-half inequalities [formula]",
             pass, detail});
    }
    return rep;
}

SuiteReport verify_dual_match(int max_n) {
    SuiteReport rep{"dual-match", max_n, 0, {}};
    for (const Graph& g : enumerate_graphs(max_n, true)) {
        ++rep.graph_count;
        Presentation written = bdual_handwritten(g);
        Presentation computed = quadratic_dual(b_presentation(g));
        bool pass = same_relation_span(written, computed);
        MonomialOrder ord = MonomialOrder::deglex_default(written.alphabet);
        size_t dim = graded_row_reduce(written.relations, ord, 2).size();
        rep.rows.push_back({describe_graph(g),
                            "handwritten flat-dual relations span the orthogonal complement",
                            pass, "span dimension " + std::to_string(dim)});
    }
    return rep;
}

SuiteReport verify_frobenius(int max_n) {
    SuiteReport rep{"frobenius", max_n, 0, {}};
    for (const Graph& g : admissible_class(max_n)) {
        if (g.edges.empty()) continue;
        ++rep.graph_count;
        for (int variant = 0; variant < 2; ++variant) {
            Presentation pres = variant == 0 ? b_presentation(g) : q_presentation(g);
            const char* name = variant == 0 ? "flat dual" : "deformed dual";
            TruncatedGB gb = groebner_basis(quadratic_dual(pres), g.n);
            size_t top_words = gb.normal_words(g.n - 1).back().size();
            auto reports = frobenius_degeneracy_witness(g, gb);
            size_t degenerate = 0;
            for (const auto& r : reports) degenerate += r.degenerate ? 1 : 0;
            bool pass = degenerate == reports.size();
            std::string detail = std::to_string(degenerate) + "/" +
                                 std::to_string(reports.size()) + " edges annihilate; " +
                                 std::to_string(top_words) + " words at degree " +
                                 std::to_string(g.n - 1);
            rep.rows.push_back(
                {describe_graph(g),
                 std::string("edge generators annihilate the top graded piece [") + name + "]",
                 pass, detail});
        }
    }
    return rep;
}

std::vector<std::string> suite_names() {
    return {"dim3", "gb-quadratic", "koszul", "palindrome", "dual-match", "frobenius"};
}

int default_max_n(const std::string& suite) {
    if (suite == "dim3") return 5;
    if (suite == "palindrome") return 7;
    if (suite == "gb-quadratic" || suite == "koszul" || suite == "dual-match" ||
        suite == "frobenius")
        return 6;
    throw std::invalid_argument("unknown suite: " + suite);
}

SuiteReport run_suite(const std::string& name, int max_n, int budget_override) {
    if (name == "dim3") return verify_dim3(max_n);
    if (name == "gb-quadratic") return verify_gb_quadratic(max_n);
    if (name == "koszul") return verify_koszul(max_n, budget_override);
    if (name == "palindrome") return verify_palindrome(max_n);
    if (name == "dual-match") return verify_dual_match(max_n);
    if (name == "frobenius") return verify_frobenius(max_n);
    throw std::invalid_argument("unknown suite: " + name);
}

std::string render_report(const SuiteReport& r) {
    std::ostringstream out;
    out << "suite " << r.suite << ": max_n " << r.max_n << ", " << r.graph_count << " graphs, "
        << r.rows.size() << " checks, " << r.failure_count() << " failures\n";
    for (const CheckRow& row : r.rows)
        if (!row.pass) out << "FAIL " << row.graph << " :: " << row.check << " :: " << row.detail
                           << "\n";
    return out.str();
}

std::string report_json(const SuiteReport& r) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["suite"] = r.suite;
    j["max_n"] = r.max_n;
    j["graph_count"] = r.graph_count;
    j["check_count"] = r.rows.size();
    j["failure_count"] = r.failure_count();
    j["all_pass"] = r.all_pass();
    j["rows"] = nlohmann::ordered_json::array();
    for (const CheckRow& row : r.rows) {
        nlohmann::ordered_json jr;
        jr["graph"] = row.graph;
        jr["check"] = row.check;
        jr["pass"] = row.pass;
        jr["detail"] = row.detail;
        j["rows"].push_back(std::move(jr));
    }
    return j.dump(2) + "\n";
}

}  // namespace koszul
