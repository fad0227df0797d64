#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "koszul/freealg.hpp"
#include "koszul/presentations.hpp"

namespace koszul {

// Groebner basis of a two-sided ideal generated in degree 2, completed up
// to a degree bound.  Every obstruction of degree <= bound is resolved, so
// normal forms, normal words and dimensions are exact for degrees <= bound.
class TruncatedGB {
  public:
    // Generators must be homogeneous of degree 2 (zero entries are fine).
    TruncatedGB(const std::vector<NcPoly>& generators, const MonomialOrder& ord, int degree_bound,
                int alphabet_size);

    const std::vector<NcPoly>& basis() const { return basis_; }
    const MonomialOrder& order() const { return ord_; }
    int degree_bound() const { return bound_; }
    int max_basis_degree() const;
    bool is_quadratic() const { return max_basis_degree() <= 2; }

    // Remainder with no leading word of the basis as a subword of any term.
    // Exact for inputs of degree <= bound; throws above the bound.
    NcPoly normal_form(const NcPoly& p) const;

    std::vector<Word> leading_words() const;
    // Normal words per degree 0..max_degree (max_degree <= bound).
    std::vector<std::vector<Word>> normal_words(int max_degree) const;
    std::vector<int64_t> dim_vector(int max_degree) const;

  private:
    void append(NcPoly p);

    MonomialOrder ord_;
    int bound_;
    int nletters_;
    std::vector<NcPoly> basis_;
    std::unordered_map<Word, size_t, WordHash> lead_of_;
    std::vector<int> lead_lengths_;  // distinct lengths, ascending
};

// Alignments of w2 against a left-anchored w1 that make the two words
// collide: proper overlaps (left, right) with w1*right == left*w2 and left
// nonempty, and containments of w2 in w1 with w1 == left*w2*right.  The
// identical alignment of equal words is excluded; collisions extending to
// the left of w1 are overlaps(w2, w1).  Ordered by offset of w2 ascending.
std::vector<std::pair<Word, Word>> overlaps(const Word& w1, const Word& w2);

// Convenience: complete the relation span of a presentation under the
// default order for its alphabet.
TruncatedGB groebner_basis(const Presentation& p, int degree_bound);

std::string render_gb(const TruncatedGB& gb, const Alphabet& a);

}  // namespace koszul
