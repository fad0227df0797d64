#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace koszul {

// Simple graph on vertices 1..n. Edges are stored normalized as (hi, lo)
// with hi > lo, sorted ascending, no duplicates.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    bool has_edge(int i, int j) const;
    int edge_count() const { return static_cast<int>(edges.size()); }

    bool operator==(const Graph&) const = default;
};

// Validates vertex range, rejects loops, normalizes and dedupes.
Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs);

// Families: empty, line, star, cycle, complete, butterfly, diamond.
// butterfly and diamond have fixed vertex counts (5 and 4).
Graph named_family(std::string_view name, int n);

struct Triangle {
    int a, b, c;  // a > b > c
    bool operator==(const Triangle&) const = default;
};

std::vector<Triangle> triangles(const Graph& g);
bool is_triangle_free(const Graph& g);

// True iff two distinct triangles share at least one vertex.
bool has_overlapping_triangles(const Graph& g);

bool are_isomorphic(const Graph& g1, const Graph& g2);

// One representative per isomorphism class, canonical = lexicographically
// minimal edge set over vertex relabelings.  With no_isolated set, classes
// with an isolated vertex are dropped and all vertex counts 2..max_n are
// covered; otherwise all classes on exactly max_n vertices are returned.
std::vector<Graph> enumerate_graphs(int max_n, bool no_isolated);

// True iff g relabels onto its own canonical representative identically.
Graph canonical_form(const Graph& g);

// Text format: first non-comment line "n", then one "i j" pair per line.
// '#' starts a comment.  Errors carry 1-based line numbers.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list_text(const std::string& text);

// graph6 format (single graph, n <= 62).
Graph parse_graph6(std::string_view s);

// Brute-force subgraph containment (not necessarily induced) used as an
// independent cross-check for has_overlapping_triangles.
bool contains_subgraph(const Graph& host, const Graph& pattern);

}  // namespace koszul
