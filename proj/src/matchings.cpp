#include "koszul/matchings.hpp"

#include <algorithm>
#include <functional>

namespace koszul {

namespace {

Int binom(unsigned long n, unsigned long k) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

}  // namespace

std::vector<std::vector<Matching>> partial_matchings(const Graph& g) {
    std::vector<std::vector<Matching>> groups(static_cast<size_t>(g.n / 2) + 1);
    Matching cur;
    std::vector<char> used(static_cast<size_t>(g.n) + 1, 0);
    std::function<void(size_t)> extend = [&](size_t from) {
        // edges arrive in ascending (hi, lo) order; reverse for canonical form
        groups[cur.size()].emplace_back(cur.rbegin(), cur.rend());
        for (size_t i = from; i < g.edges.size(); ++i) {
            auto [hi, lo] = g.edges[i];
            if (used[hi] || used[lo]) continue;
            used[hi] = used[lo] = 1;
            cur.push_back(g.edges[i]);
            extend(i + 1);
            cur.pop_back();
            used[hi] = used[lo] = 0;
        }
    };
    extend(0);
    return groups;
}

std::vector<int> allowed_vertices(const Graph& g, const Matching& w) {
    std::vector<char> used(static_cast<size_t>(g.n) + 1, 0);
    for (auto [a, b] : w) used[a] = used[b] = 1;
    std::vector<int> out;
    for (int m = 1; m <= g.n; ++m) {
        if (used[m]) continue;
        bool ok = true;
        for (auto [a, b] : w) {
            if (m < a || !g.has_edge(m, a) || !g.has_edge(m, b)) continue;
            ok = false;
            break;
        }
        if (ok) out.push_back(m);
    }
    return out;
}

IntSeries hilbert_formula(const Graph& g) {
    if (has_overlapping_triangles(g))
        throw ClassViolation("hilbert_formula: graph has overlapping triangles");
    return hilbert_formula_raw(g);
}

IntSeries hilbert_formula_raw(const Graph& g) {
    IntSeries p;
    p.coeffs.assign(static_cast<size_t>(g.n) + 1, Int(0));
    for (const auto& group : partial_matchings(g)) {
        for (const Matching& w : group) {
            size_t r = allowed_vertices(g, w).size();
            for (size_t q = 0; q <= r && w.size() + q <= static_cast<size_t>(g.n); ++q)
                p.coeffs[w.size() + q] += binom(r, q);
        }
    }
    return p;
}

IntSeries triangle_free_formula(const Graph& g) {
    if (!is_triangle_free(g))
        throw ClassViolation("triangle_free_formula: graph has a triangle");
    IntSeries p;
    p.coeffs.assign(static_cast<size_t>(g.n) + 1, Int(0));
    auto groups = partial_matchings(g);
    for (size_t k = 0; k < groups.size(); ++k) {
        size_t free_vertices = static_cast<size_t>(g.n) - 2 * k;
        for (size_t q = 0; q <= free_vertices; ++q)
            p.coeffs[k + q] += Int(groups[k].size()) * binom(free_vertices, q);
    }
    return p;
}

std::vector<Word> qdual_basis(const Graph& g, int d) {
    if (has_overlapping_triangles(g))
        throw ClassViolation("qdual_basis: graph has overlapping triangles");
    if (d < 0) throw std::invalid_argument("qdual_basis: negative degree");
    Alphabet a = Alphabet::dual(g);
    std::vector<Word> out;
    for (const auto& group : partial_matchings(g)) {
        for (const Matching& w : group) {
            if (w.size() > static_cast<size_t>(d)) continue;
            size_t q = static_cast<size_t>(d) - w.size();
            std::vector<int> allowed = allowed_vertices(g, w);
            if (q > allowed.size()) continue;
            Word stem;
            for (auto [hi, lo] : w)
                stem.push_back(static_cast<uint8_t>(a.edge_letter(hi, lo)));
            for (uint32_t mask = 0; mask < (1u << allowed.size()); ++mask) {
                if (static_cast<size_t>(__builtin_popcount(mask)) != q) continue;
                Word word = stem;
                for (size_t i = allowed.size(); i-- > 0;)
                    if (mask & (1u << i)) word.push_back(a.vertex_letter(allowed[i]));
                out.push_back(std::move(word));
            }
        }
    }
    return out;
}

std::vector<FrobeniusEdgeReport> frobenius_degeneracy_witness(const Graph& g,
                                                              const TruncatedGB& gb) {
    if (g.edges.empty())
        throw std::invalid_argument("frobenius_degeneracy_witness: graph has no edges");
    if (gb.degree_bound() < g.n)
        throw std::invalid_argument("frobenius_degeneracy_witness: degree bound below n");
    Alphabet a = Alphabet::dual(g);
    std::vector<Word> top = gb.normal_words(g.n - 1).back();
    std::vector<FrobeniusEdgeReport> out;
    for (auto [hi, lo] : g.edges) {
        uint8_t t = static_cast<uint8_t>(a.edge_letter(hi, lo));
        bool degenerate = true;
        for (const Word& x : top) {
            Word xe = x;
            xe.push_back(t);
            if (!gb.normal_form(NcPoly::term(std::move(xe), 1)).is_zero()) {
                degenerate = false;
                break;
            }
        }
        out.push_back({{hi, lo}, degenerate});
    }
    return out;
}

}  // namespace koszul
