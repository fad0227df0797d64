#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "koszul/graph.hpp"
#include "koszul/groebner.hpp"
#include "koszul/series.hpp"

namespace koszul {

// Thrown when a graph is outside the family a formula is proven for.
struct ClassViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Set of vertex-disjoint edges, each (hi, lo) with hi > lo, listed in
// decreasing hi order.
using Matching = std::vector<std::pair<int, int>>;

// All partial matchings grouped by size; slot p holds the matchings with
// p edges, for p = 0..floor(n/2).  Slot 0 is the empty matching.
std::vector<std::vector<Matching>> partial_matchings(const Graph& g);

// Vertices m outside the matching such that for every matching edge
// (a, b): m < a, or (m, a) is not an edge, or (m, b) is not an edge.
// Ascending.
std::vector<int> allowed_vertices(const Graph& g, const Matching& w);

// p(z) = sum over matchings W of z^|W| (1+z)^{r_W}, truncated at degree n.
// Inverting p(-z) gives the Hilbert series of the graph algebra; valid
// only without overlapping triangles.
IntSeries hilbert_formula(const Graph& g);

// The same sum without the class guard, for side-by-side comparison
// against computed dimensions on graphs where the formula is unproven.
IntSeries hilbert_formula_raw(const Graph& g);

// Triangle-free specialization: sum_p l_p z^p (1+z)^(n-2p) with l_p the
// number of p-edge matchings.
IntSeries triangle_free_formula(const Graph& g);

// Monomial basis of the degree-d component of the dual algebra: a
// matching block in decreasing hi order followed by a decreasing block of
// allowed vertices.  Words over the dual alphabet of g.
std::vector<Word> qdual_basis(const Graph& g, int d);

struct FrobeniusEdgeReport {
    std::pair<int, int> edge;
    bool degenerate;  // every degree-(n-1) normal word annihilates the edge generator
};

// Right-multiplies each degree-(n-1) normal word by each edge generator
// and reduces; gb must present a dual algebra of g with bound >= n.
std::vector<FrobeniusEdgeReport> frobenius_degeneracy_witness(const Graph& g,
                                                              const TruncatedGB& gb);

}  // namespace koszul
