#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "koszul/freealg.hpp"
#include "koszul/graph.hpp"

namespace koszul {

// Quadratic presentation: generators named by the alphabet, homogeneous
// degree-2 relations.  The relation list is a generating set for the span
// and may contain dependent entries; labels run parallel to it.
struct Presentation {
    Alphabet alphabet;
    std::vector<std::string> labels;
    std::vector<NcPoly> relations;
};

// Vertex-and-edge algebra with the deformed commutation relations
//   [u_i, u_j] = u_ij (u_i - u_j)
// and their edge-edge companions, one relation per ordered tuple of
// distinct vertices (zero tuples are dropped).
Presentation q_presentation(const Graph& g);

// Flat variant: every bracket of generators that appears on the left-hand
// side above is set to zero instead.
Presentation b_presentation(const Graph& g);

// Known dual presentation of the flat variant, written out directly: the
// symmetric part of degree 2 plus incidence words e_i e_ik, shared-vertex
// words e_ik e_jk, and one three-term element per triangle.
Presentation bdual_handwritten(const Graph& g);

// Orthogonal complement of the degree-2 relation span under the
// coordinatewise pairing on words, presented over the prefix-swapped
// alphabet.  Applying it twice returns the original span.
Presentation quadratic_dual(const Presentation& p);

// Exact span equality of the degree-2 relation sets.  Requires identical
// alphabets.
bool same_relation_span(const Presentation& a, const Presentation& b);

// dims[d] of the quotient algebra for d = 0..max_degree, computed from the
// exact rank of the degree-d layer of the two-sided relation ideal.  Slow
// but direct; intended as an independent cross-check at small degrees.
std::vector<int64_t> dims_by_rank(const Presentation& p, int max_degree);

std::string render_presentation(const Presentation& p, const MonomialOrder& ord);

}  // namespace koszul
