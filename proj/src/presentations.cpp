#include "koszul/presentations.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace koszul {

namespace {

std::string tuple_label(const char* head, std::initializer_list<int> ix) {
    std::string s = head;
    s += '(';
    bool first = true;
    for (int i : ix) {
        if (!first) s += ',';
        s += std::to_string(i);
        first = false;
    }
    s += ')';
    return s;
}

std::string name_label(const char* head, const Alphabet& a, std::initializer_list<int> letters) {
    std::string s = head;
    s += '(';
    bool first = true;
    for (int t : letters) {
        if (!first) s += ',';
        s += a.name(t);
        first = false;
    }
    s += ')';
    return s;
}

// Generator lookup with the convention that a missing edge is zero.
struct Gens {
    const Alphabet& a;
    NcPoly u(int i) const { return NcPoly::var(a.vertex_letter(i)); }
    NcPoly e(int i, int j) const {
        int t = a.edge_letter(i, j);
        return t < 0 ? NcPoly() : NcPoly::var(static_cast<uint8_t>(t));
    }
};

void push(Presentation& p, std::string label, NcPoly rel) {
    if (rel.is_zero()) return;
    p.labels.push_back(std::move(label));
    p.relations.push_back(std::move(rel));
}

// Shared tuple loops for the two primal presentations; `flat` drops the
// edge-times-difference deformation terms.
Presentation primal_presentation(const Graph& g, bool flat) {
    Presentation p{Alphabet::primal(g), {}, {}};
    Gens v{p.alphabet};
    const char* h2 = flat ? "S" : "R";
    for (int i = 1; i <= g.n; ++i)
        for (int j = 1; j <= g.n; ++j) {
            if (i == j) continue;
            NcPoly rel = commutator(v.u(i), v.u(j));
            if (!flat) rel -= v.e(i, j) * (v.u(i) - v.u(j));
            push(p, tuple_label(h2, {i, j}), std::move(rel));
        }
    for (int i = 1; i <= g.n; ++i)
        for (int j = 1; j <= g.n; ++j)
            for (int k = 1; k <= g.n; ++k) {
                if (i == j || i == k || j == k) continue;
                NcPoly rel = commutator(v.u(i), v.e(j, k)) + commutator(v.e(i, k), v.u(j));
                if (!flat)
                    rel += commutator(v.e(i, k), v.e(j, k)) - v.e(i, j) * (v.e(i, k) - v.e(j, k));
                push(p, tuple_label(h2, {i, j, k}), std::move(rel));
            }
    for (int i = 1; i <= g.n; ++i)
        for (int j = 1; j <= g.n; ++j)
            for (int k = 1; k <= g.n; ++k)
                for (int l = 1; l <= g.n; ++l) {
                    int d = (i != j) + (i != k) + (i != l) + (j != k) + (j != l) + (k != l);
                    if (d != 6) continue;
                    push(p, tuple_label(h2, {i, j, k, l}), commutator(v.e(i, j), v.e(k, l)));
                }
    return p;
}

}  // namespace

Presentation q_presentation(const Graph& g) { return primal_presentation(g, false); }

Presentation b_presentation(const Graph& g) { return primal_presentation(g, true); }

Presentation bdual_handwritten(const Graph& g) {
    Presentation p{Alphabet::dual(g), {}, {}};
    const Alphabet& a = p.alphabet;
    auto x = [](int t) { return NcPoly::var(static_cast<uint8_t>(t)); };
    for (int s = 0; s < a.size(); ++s)
        for (int t = s; t < a.size(); ++t)
            push(p, name_label("A", a, {s, t}),
                 s == t ? x(s) * x(s) : x(s) * x(t) + x(t) * x(s));
    for (auto [hi, lo] : g.edges) {
        int et = a.edge_letter(hi, lo);
        push(p, name_label("U", a, {a.vertex_letter(lo), et}), x(a.vertex_letter(lo)) * x(et));
        push(p, name_label("U", a, {a.vertex_letter(hi), et}), x(a.vertex_letter(hi)) * x(et));
    }
    for (size_t s = 0; s < g.edges.size(); ++s)
        for (size_t t = 0; t < g.edges.size(); ++t) {
            if (s == t) continue;
            auto [a1, b1] = g.edges[s];
            auto [a2, b2] = g.edges[t];
            // shared vertex, ordered pair of edges
            if (a1 != a2 && a1 != b2 && b1 != a2 && b1 != b2) continue;
            int es = a.edge_letter(a1, b1), et = a.edge_letter(a2, b2);
            push(p, name_label("W", a, {es, et}), x(es) * x(et));
        }
    for (const Triangle& tr : triangles(g)) {
        NcPoly rel = x(a.vertex_letter(tr.a)) * x(a.edge_letter(tr.b, tr.c)) +
                     x(a.vertex_letter(tr.b)) * x(a.edge_letter(tr.a, tr.c)) +
                     x(a.vertex_letter(tr.c)) * x(a.edge_letter(tr.a, tr.b));
        push(p, tuple_label("T", {tr.a, tr.b, tr.c}), std::move(rel));
    }
    return p;
}

Presentation quadratic_dual(const Presentation& p) {
    const Alphabet& a = p.alphabet;
    MonomialOrder ord = MonomialOrder::deglex_default(a);
    std::vector<NcPoly> rows = graded_row_reduce(p.relations, ord, 2);

    std::unordered_map<Word, size_t, WordHash> pivot_of;
    for (size_t r = 0; r < rows.size(); ++r)
        pivot_of.emplace(leading_term(rows[r], ord).first, r);

    Presentation dual{a.with_prefix(a.prefix() == 'u' ? 'e' : 'u'), {}, {}};
    // all degree-2 words in a fixed scan order; every non-pivot word q gives
    // one dual relation  q - sum_r rows[r](q) * pivot_r
    int idx = 0;
    for (int s = 0; s < a.size(); ++s)
        for (int t = 0; t < a.size(); ++t) {
            Word q{static_cast<uint8_t>(s), static_cast<uint8_t>(t)};
            if (pivot_of.count(q)) continue;
            std::vector<std::pair<Word, Rat>> ts;
            ts.emplace_back(q, 1);
            for (size_t r = 0; r < rows.size(); ++r)
                for (const auto& [w, c] : rows[r].terms())
                    if (w == q) ts.emplace_back(leading_term(rows[r], ord).first, -c);
            dual.labels.push_back("D" + std::to_string(++idx));
            dual.relations.push_back(NcPoly::from_terms(std::move(ts)));
        }
    return dual;
}

bool same_relation_span(const Presentation& a, const Presentation& b) {
    if (!(a.alphabet == b.alphabet) && !(a.alphabet == b.alphabet.with_prefix(a.alphabet.prefix())))
        throw std::invalid_argument("same_relation_span: different alphabets");
    MonomialOrder ord = MonomialOrder::deglex_default(a.alphabet);
    return graded_row_reduce(a.relations, ord, 2) == graded_row_reduce(b.relations, ord, 2);
}

std::vector<int64_t> dims_by_rank(const Presentation& p, int max_degree) {
    const int m = p.alphabet.size();
    MonomialOrder ord = MonomialOrder::deglex_default(p.alphabet);
    std::vector<int64_t> dims{1};
    if (max_degree >= 1) dims.push_back(m);
    int64_t power = m;
    std::vector<NcPoly> layer;  // echelon basis of the ideal in the current degree
    for (int d = 2; d <= max_degree; ++d) {
        power *= m;
        std::vector<NcPoly> rows;
        if (d == 2) {
            rows = p.relations;
        } else {
            // ideal layer recursion: I_d = V I_{d-1} + I_{d-1} V; the
            // right-multiplied rows keep distinct leading words and act as
            // ready-made pivots, so they go first
            rows.reserve(2 * m * layer.size());
            for (const NcPoly& f : layer)
                for (int t = 0; t < m; ++t) rows.push_back(f * NcPoly::var(static_cast<uint8_t>(t)));
            for (const NcPoly& f : layer)
                for (int t = 0; t < m; ++t) rows.push_back(NcPoly::var(static_cast<uint8_t>(t)) * f);
        }
        for (const NcPoly& f : rows)
            if (!f.is_zero() && f.homogeneous_degree() != d)
                throw std::invalid_argument("dims_by_rank: relations must be quadratic");
        layer = span_echelon(rows, ord);
        dims.push_back(power - static_cast<int64_t>(layer.size()));
    }
    return dims;
}

std::string render_presentation(const Presentation& p, const MonomialOrder& ord) {
    std::string out = "generators:";
    for (int t = 0; t < p.alphabet.size(); ++t) {
        out += ' ';
        out += p.alphabet.name(t);
    }
    out += '\n';
    for (size_t r = 0; r < p.relations.size(); ++r) {
        out += p.labels[r];
        out += " = ";
        out += render_poly(p.relations[r], p.alphabet, ord);
        out += '\n';
    }
    return out;
}

}  // namespace koszul
