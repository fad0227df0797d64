#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "koszul/freealg.hpp"
#include "koszul/graph.hpp"

namespace koszul {

// Signed square-free monomial combination, homogeneous.  A monomial is a
// set of generators encoded as a bitmask in rank space (bit r = generator
// of precedence rank r), read as the product in descending rank order.
// Terms are sorted by mask ascending.
struct ExtPoly {
    std::vector<std::pair<uint32_t, Rat>> terms;
    bool is_zero() const { return terms.empty(); }
};

// Mapping between alphabet letters and mask bits for a given precedence.
class ExteriorSpace {
  public:
    ExteriorSpace(const Alphabet& a, const MonomialOrder& ord);

    int dimension() const { return static_cast<int>(letter_of_rank_.size()); }
    const Alphabet& alphabet() const { return a_; }
    uint32_t bit(int letter) const { return uint32_t{1} << ord_.rank(static_cast<uint8_t>(letter)); }
    int letter_at(int rank) const { return letter_of_rank_[rank]; }

    // sign of reordering the concatenation desc(a)·desc(b) into desc(a|b);
    // 0 when the masks intersect
    static int merge_sign(uint32_t a, uint32_t b);
    static ExtPoly wedge(const ExtPoly& p, const ExtPoly& q);

    std::string render(const ExtPoly& p) const;

  private:
    Alphabet a_;
    MonomialOrder ord_;
    std::vector<int> letter_of_rank_;
};

// Comparison in the degree-then-rank order: degree first, ties by the
// highest-rank generator in the symmetric difference.
int ext_mask_cmp(uint32_t a, uint32_t b);

// Defining relations of the dual of the flat algebra, living in the
// exterior algebra itself: both incidence products e_j e_jk per edge, one
// shared-vertex product per unordered edge pair, one three-term element
// per triangle.
std::vector<ExtPoly> exterior_dual_relations(const Graph& g, const ExteriorSpace& s);

// The leading sets those relations are expected to produce: {j, jk} and
// {k, jk} per edge, {ik, jk} per shared-vertex pair, {i, jk} per triangle
// i > j > k.  Sorted ascending.
std::vector<uint32_t> expected_leading_masks(const Graph& g, const ExteriorSpace& s);

// Buchberger completion inside the exterior algebra, with set divisibility
// and union overlaps, truncated at a degree bound.
class ExteriorGB {
  public:
    ExteriorGB(const std::vector<ExtPoly>& relations, int degree_bound);

    const std::vector<ExtPoly>& basis() const { return basis_; }
    int degree_bound() const { return bound_; }
    bool is_quadratic() const;
    // leading masks of the degree-2 basis elements, sorted ascending
    std::vector<uint32_t> quadratic_leading_masks() const;
    ExtPoly normal_form(const ExtPoly& p) const;
    // counts of normal monomials per degree 0..max_degree over nletters
    // generators (max_degree <= bound)
    std::vector<int64_t> dim_vector(int nletters, int max_degree) const;

  private:
    void append(ExtPoly p);

    int bound_;
    std::vector<ExtPoly> basis_;
    std::vector<uint32_t> leads_;
};

}  // namespace koszul
