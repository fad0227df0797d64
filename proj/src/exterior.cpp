#include "koszul/exterior.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace koszul {

namespace {

int degree_of(const ExtPoly& p) {
    return p.is_zero() ? -1 : std::popcount(p.terms.front().first);
}

ExtPoly from_ext_terms(std::vector<std::pair<uint32_t, Rat>> ts) {
    std::sort(ts.begin(), ts.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    ExtPoly p;
    for (auto& [m, c] : ts) {
        if (!p.terms.empty() && p.terms.back().first == m)
            p.terms.back().second += c;
        else
            p.terms.emplace_back(m, std::move(c));
    }
    std::erase_if(p.terms, [](const auto& t) { return t.second == 0; });
    return p;
}

struct MaskGreater {
    bool operator()(uint32_t a, uint32_t b) const { return ext_mask_cmp(a, b) > 0; }
};

}  // namespace

int ext_mask_cmp(uint32_t a, uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb ? -1 : 1;
    if (a == b) return 0;
    uint32_t top = uint32_t{1} << (31 - std::countl_zero(a ^ b));
    return (a & top) ? 1 : -1;
}

ExteriorSpace::ExteriorSpace(const Alphabet& a, const MonomialOrder& ord) : a_(a), ord_(ord) {
    if (a.size() > 32) throw std::invalid_argument("alphabet too large for mask encoding");
    letter_of_rank_.resize(a.size());
    for (int t = 0; t < a.size(); ++t) letter_of_rank_[ord.rank(static_cast<uint8_t>(t))] = t;
}

int ExteriorSpace::merge_sign(uint32_t a, uint32_t b) {
    if (a & b) return 0;
    int inversions = 0;
    for (uint32_t rest = b; rest;) {
        uint32_t low = rest & -rest;
        inversions += std::popcount(a & (low - 1));
        rest ^= low;
    }
    return inversions & 1 ? -1 : 1;
}

ExtPoly ExteriorSpace::wedge(const ExtPoly& p, const ExtPoly& q) {
    std::vector<std::pair<uint32_t, Rat>> ts;
    for (const auto& [ma, ca] : p.terms)
        for (const auto& [mb, cb] : q.terms) {
            int s = merge_sign(ma, mb);
            if (s) ts.emplace_back(ma | mb, ca * cb * s);
        }
    return from_ext_terms(std::move(ts));
}

std::string ExteriorSpace::render(const ExtPoly& p) const {
    if (p.is_zero()) return "0";
    std::vector<const std::pair<uint32_t, Rat>*> ts;
    for (const auto& t : p.terms) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(),
              [](auto* x, auto* y) { return ext_mask_cmp(x->first, y->first) > 0; });
    std::string out;
    for (size_t i = 0; i < ts.size(); ++i) {
        const auto& [m, c] = *ts[i];
        Rat abs = c < 0 ? Rat(-c) : c;
        if (i == 0) {
            if (c < 0) out += '-';
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (abs != 1 || m == 0) {
            out += abs.get_str();
            if (m != 0) out += '*';
        }
        bool first = true;
        for (int r = dimension() - 1; r >= 0; --r)
            if (m >> r & 1) {
                if (!first) out += '^';
                out += a_.name(letter_of_rank_[r]);
                first = false;
            }
    }
    return out;
}

std::vector<ExtPoly> exterior_dual_relations(const Graph& g, const ExteriorSpace& s) {
    const Alphabet& a = s.alphabet();
    std::vector<ExtPoly> rels;
    auto mono = [&](uint32_t m) {
        ExtPoly p;
        p.terms.emplace_back(m, 1);
        return p;
    };
    for (auto [hi, lo] : g.edges) {
        uint32_t e = s.bit(a.edge_letter(hi, lo));
        rels.push_back(mono(s.bit(a.vertex_letter(lo)) | e));
        rels.push_back(mono(s.bit(a.vertex_letter(hi)) | e));
    }
    for (size_t i = 0; i < g.edges.size(); ++i)
        for (size_t j = i + 1; j < g.edges.size(); ++j) {
            auto [a1, b1] = g.edges[i];
            auto [a2, b2] = g.edges[j];
            if (a1 != a2 && a1 != b2 && b1 != a2 && b1 != b2) continue;
            rels.push_back(mono(s.bit(a.edge_letter(a1, b1)) | s.bit(a.edge_letter(a2, b2))));
        }
    for (const Triangle& t : triangles(g)) {
        ExtPoly p;
        std::vector<std::pair<uint32_t, Rat>> ts;
        ts.emplace_back(s.bit(a.vertex_letter(t.a)) | s.bit(a.edge_letter(t.b, t.c)), 1);
        ts.emplace_back(s.bit(a.vertex_letter(t.b)) | s.bit(a.edge_letter(t.a, t.c)), 1);
        ts.emplace_back(s.bit(a.vertex_letter(t.c)) | s.bit(a.edge_letter(t.a, t.b)), 1);
        rels.push_back(from_ext_terms(std::move(ts)));
    }
    return rels;
}

std::vector<uint32_t> expected_leading_masks(const Graph& g, const ExteriorSpace& s) {
    const Alphabet& a = s.alphabet();
    std::vector<uint32_t> out;
    for (auto [hi, lo] : g.edges) {
        uint32_t e = s.bit(a.edge_letter(hi, lo));
        out.push_back(s.bit(a.vertex_letter(lo)) | e);
        out.push_back(s.bit(a.vertex_letter(hi)) | e);
    }
    for (size_t i = 0; i < g.edges.size(); ++i)
        for (size_t j = i + 1; j < g.edges.size(); ++j) {
            auto [a1, b1] = g.edges[i];
            auto [a2, b2] = g.edges[j];
            if (a1 != a2 && a1 != b2 && b1 != a2 && b1 != b2) continue;
            out.push_back(s.bit(a.edge_letter(a1, b1)) | s.bit(a.edge_letter(a2, b2)));
        }
    for (const Triangle& t : triangles(g))
        out.push_back(s.bit(a.vertex_letter(t.a)) | s.bit(a.edge_letter(t.b, t.c)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void ExteriorGB::append(ExtPoly p) {
    uint32_t lead = 0;
    for (const auto& [m, c] : p.terms)
        if (ext_mask_cmp(m, lead) > 0 || lead == 0) lead = m;
    Rat lc;
    for (const auto& [m, c] : p.terms)
        if (m == lead) lc = c;
    for (auto& [m, c] : p.terms) c /= lc;
    leads_.push_back(lead);
    basis_.push_back(std::move(p));
}

ExteriorGB::ExteriorGB(const std::vector<ExtPoly>& relations, int degree_bound)
    : bound_(degree_bound) {
    if (degree_bound < 2) throw std::invalid_argument("degree bound must be at least 2");
    // mutual row reduction of the degree-2 input; at equal degree set
    // divisibility is mask equality, so this is plain RREF
    for (const ExtPoly& rel : relations) {
        if (rel.is_zero()) continue;
        if (degree_of(rel) != 2) throw std::invalid_argument("relations must be quadratic");
        ExtPoly nf = normal_form(rel);
        if (!nf.is_zero()) append(std::move(nf));
    }
    for (int d = 3; d <= bound_; ++d) {
        size_t fixed = basis_.size();
        for (size_t i = 0; i < fixed; ++i)
            for (size_t j = i + 1; j < fixed; ++j) {
                uint32_t u = leads_[i] | leads_[j];
                if (std::popcount(u) != d) continue;
                uint32_t ci = u & ~leads_[i], cj = u & ~leads_[j];
                ExtPoly mi, mj;
                mi.terms.emplace_back(ci, ExteriorSpace::merge_sign(ci, leads_[i]));
                mj.terms.emplace_back(cj, ExteriorSpace::merge_sign(cj, leads_[j]));
                ExtPoly s = ExteriorSpace::wedge(mi, basis_[i]);
                ExtPoly t = ExteriorSpace::wedge(mj, basis_[j]);
                std::vector<std::pair<uint32_t, Rat>> diff = s.terms;
                for (auto& [m, c] : t.terms) diff.emplace_back(m, -c);
                ExtPoly nf = normal_form(from_ext_terms(std::move(diff)));
                if (!nf.is_zero()) append(std::move(nf));
            }
    }

    // tail reduction at the end; leading masks are stable under it
    for (size_t i = 0; i < basis_.size(); ++i) {
        ExtPoly tail = basis_[i];
        std::erase_if(tail.terms, [&](const auto& t) { return t.first == leads_[i]; });
        ExtPoly reduced = normal_form(tail);
        reduced.terms.emplace_back(leads_[i], 1);
        basis_[i] = from_ext_terms(std::move(reduced.terms));
    }
}

ExtPoly ExteriorGB::normal_form(const ExtPoly& p) const {
    std::map<uint32_t, Rat, MaskGreater> work;
    for (const auto& [m, c] : p.terms) {
        if (std::popcount(m) > bound_)
            throw std::invalid_argument("normal_form beyond the degree bound");
        work.emplace(m, c);
    }
    std::vector<std::pair<uint32_t, Rat>> out;
    while (!work.empty()) {
        auto [m, c] = *work.begin();
        size_t hit = basis_.size();
        for (size_t i = 0; i < basis_.size(); ++i)
            if ((leads_[i] & m) == leads_[i]) {
                hit = i;
                break;
            }
        if (hit == basis_.size()) {
            out.emplace_back(m, c);
            work.erase(work.begin());
            continue;
        }
        uint32_t co = m & ~leads_[hit];
        Rat scale = c * ExteriorSpace::merge_sign(co, leads_[hit]);
        for (const auto& [t, k] : basis_[hit].terms) {
            int s = ExteriorSpace::merge_sign(co, t);
            if (!s) continue;
            auto it = work.try_emplace(co | t, 0).first;
            it->second -= scale * k * s;
            if (it->second == 0) work.erase(it);
        }
    }
    return from_ext_terms(std::move(out));
}

bool ExteriorGB::is_quadratic() const {
    for (uint32_t lead : leads_)
        if (std::popcount(lead) != 2) return false;
    return true;
}

std::vector<uint32_t> ExteriorGB::quadratic_leading_masks() const {
    std::vector<uint32_t> out;
    for (uint32_t lead : leads_)
        if (std::popcount(lead) == 2) out.push_back(lead);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int64_t> ExteriorGB::dim_vector(int nletters, int max_degree) const {
    if (max_degree > bound_) throw std::invalid_argument("dim_vector beyond the degree bound");
    std::vector<int64_t> dims{1};
    std::vector<uint32_t> level{0};
    for (int d = 1; d <= max_degree; ++d) {
        std::vector<uint32_t> next;
        for (uint32_t m : level) {
            // extend below the lowest set bit so each subset appears once
            int limit = m ? std::countr_zero(m) : nletters;
            for (int b = 0; b < limit; ++b) {
                uint32_t x = m | (uint32_t{1} << b);
                bool normal = true;
                for (uint32_t lead : leads_)
                    if ((lead & x) == lead && (lead >> b & 1)) {
                        normal = false;
                        break;
                    }
                if (normal) next.push_back(x);
            }
        }
        dims.push_back(static_cast<int64_t>(next.size()));
        level = std::move(next);
    }
    return dims;
}

}  // namespace koszul
