#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "koszul/graph.hpp"

namespace koszul {

using Rat = mpq_class;

// A generator: one per vertex (u_i / e_i) and one per edge (u_ij / e_ij,
// unordered pair stored hi > lo).
struct Variable {
    bool is_edge;
    int a;  // vertex index, or larger edge endpoint
    int b;  // 0, or smaller edge endpoint
    bool operator==(const Variable&) const = default;
};

// Letters 0..n-1 are the vertex generators, letters n.. are the edge
// generators in ascending (hi, lo) order.  The prefix distinguishes the
// primal algebras (u) from the dual ones (e).
class Alphabet {
  public:
    static Alphabet primal(const Graph& g) { return Alphabet(g, 'u'); }
    static Alphabet dual(const Graph& g) { return Alphabet(g, 'e'); }

    int size() const { return static_cast<int>(vars_.size()); }
    int vertex_count() const { return n_; }
    int edge_count() const { return size() - n_; }
    char prefix() const { return prefix_; }
    const Variable& var(int letter) const { return vars_[letter]; }
    uint8_t vertex_letter(int i) const;
    // -1 when (i, j) is not an edge of the underlying graph.
    int edge_letter(int i, int j) const;
    std::string name(int letter) const;
    Alphabet with_prefix(char p) const {
        Alphabet a = *this;
        a.prefix_ = p;
        return a;
    }
    bool operator==(const Alphabet&) const = default;

  private:
    Alphabet(const Graph& g, char prefix);
    char prefix_;
    int n_;
    std::vector<Variable> vars_;
};

using Word = std::vector<uint8_t>;

// Degree-lexicographic comparison driven by a per-letter precedence rank.
class MonomialOrder {
  public:
    // Vertex variables above all edge variables, u_n > ... > u_1; edge
    // variables by (i, j) > (k, l) iff i > k or (i = k and j > l).
    static MonomialOrder deglex_default(const Alphabet& a);
    // Same, with the precedence among edge variables reversed.
    static MonomialOrder deglex_reverse_edges(const Alphabet& a);

    int rank(uint8_t letter) const { return rank_[letter]; }
    int compare(const Word& w1, const Word& w2) const;
    bool less(const Word& w1, const Word& w2) const { return compare(w1, w2) < 0; }
    bool operator==(const MonomialOrder&) const = default;

  private:
    std::vector<int> rank_;
};

// Order-independent structural comparison used for canonical term storage.
int word_cmp(const Word& a, const Word& b);

// Sparse polynomial in the free associative algebra, exact rational
// coefficients, terms kept sorted by word_cmp ascending.
class NcPoly {
  public:
    NcPoly() = default;
    static NcPoly term(Word w, Rat c);
    static NcPoly var(uint8_t letter) { return term(Word{letter}, 1); }
    // Sorts, merges duplicate words, drops zero coefficients.
    static NcPoly from_terms(std::vector<std::pair<Word, Rat>> ts);

    bool is_zero() const { return terms_.empty(); }
    const std::vector<std::pair<Word, Rat>>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    void add_term(const Word& w, const Rat& c);
    NcPoly& operator+=(const NcPoly& o);
    NcPoly& operator-=(const NcPoly& o);
    NcPoly& operator*=(const Rat& c);
    friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
    friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
    NcPoly operator-() const;
    friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
    bool operator==(const NcPoly&) const = default;

    // Degree when homogeneous; throws std::invalid_argument otherwise.
    int homogeneous_degree() const;

  private:
    std::vector<std::pair<Word, Rat>> terms_;
};

NcPoly commutator(const NcPoly& a, const NcPoly& b);

// Largest term w.r.t. the order; throws std::invalid_argument on zero.
std::pair<Word, Rat> leading_term(const NcPoly& p, const MonomialOrder& ord);

// Reduced row echelon basis of the span of homogeneous degree-d inputs.
// Output rows are monic, mutually reduced, sorted by leading word
// descending.  Throws on inhomogeneous input or degree mismatch.
std::vector<NcPoly> graded_row_reduce(const std::vector<NcPoly>& polys, const MonomialOrder& ord,
                                      int degree);

// Row echelon basis of the span: monic rows with pairwise distinct leading
// words, not mutually reduced.  Cheaper than graded_row_reduce; meant for
// rank queries over large spans.
std::vector<NcPoly> span_echelon(const std::vector<NcPoly>& rows, const MonomialOrder& ord);

std::string render_word(const Word& w, const Alphabet& a);
std::string render_poly(const NcPoly& p, const Alphabet& a, const MonomialOrder& ord);

struct WordHash {
    size_t operator()(const Word& w) const {
        size_t h = 1469598103934665603ull;
        for (uint8_t c : w) h = (h ^ c) * 1099511628211ull;
        return h;
    }
};

}  // namespace koszul
