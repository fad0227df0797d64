#pragma once

#include <string>
#include <vector>

#include "koszul/graph.hpp"

namespace koszul {

// Truncation degree for dimension runs on the deformed algebra; shrinks
// with n because dim growth is exponential.
int q_degree_budget(int n);

struct CheckRow {
    std::string graph;
    std::string check;  // names the methods compared
    bool pass;
    std::string detail;  // degree range and the values involved
};

struct SuiteReport {
    std::string suite;
    int max_n = 0;
    int graph_count = 0;
    std::vector<CheckRow> rows;

    int failure_count() const;
    bool all_pass() const { return failure_count() == 0; }
};

// Degree-3 dimensions of the deformed and flat algebras agree, by
// truncated completion and by the exact-rank oracle.  Graphs: every
// isomorphism class without isolated vertices, 2..max_n.
SuiteReport verify_dim3(int max_n);

// Completion of the flat-dual relations inside the exterior algebra stays
// quadratic up to bound n+1 and its leading sets are exactly the predicted
// families, under both built-in precedences.  Graphs: the class without
// overlapping triangles.
SuiteReport verify_gb_quadratic(int max_n);

// Dual series computed four ways agree to degree n; the deformed algebra's
// series times the alternating dual series is 1 to the degree budget; the
// dual series has degree n with top coefficient 1.  Graphs: the class
// without overlapping triangles.  budget_override > 0 replaces
// q_degree_budget.
SuiteReport verify_koszul(int max_n, int budget_override = -1);

// The dual series is palindromic exactly for triangle-free graphs, and the
// upper-half inequalities p_t >= p_{n-t} hold throughout the class.
SuiteReport verify_palindrome(int max_n);

// The handwritten dual presentation of the flat algebra spans exactly the
// computed orthogonal complement.  Graphs: every class without isolated
// vertices (no triangle restriction).
SuiteReport verify_dual_match(int max_n);

// Every edge generator right-annihilates the full degree-(n-1) component
// of both duals.  Graphs: the class without overlapping triangles, at
// least one edge.
SuiteReport verify_frobenius(int max_n);

// Suite names: dim3, gb-quadratic, koszul, palindrome, dual-match,
// frobenius.  Throws std::invalid_argument for unknown names.
SuiteReport run_suite(const std::string& name, int max_n, int budget_override = -1);
int default_max_n(const std::string& suite);
std::vector<std::string> suite_names();

std::string describe_graph(const Graph& g);
// summary line plus one line per failing row
std::string render_report(const SuiteReport& r);
// schema_version 1; deterministic field and row order
std::string report_json(const SuiteReport& r);

}  // namespace koszul
