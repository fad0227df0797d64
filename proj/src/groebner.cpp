#include "koszul/groebner.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace koszul {

namespace {

struct OrdGreater {
    const MonomialOrder* ord;
    bool operator()(const Word& a, const Word& b) const { return ord->compare(a, b) > 0; }
};

bool equal_range_of(const Word& u, size_t upos, const Word& v, size_t vpos, size_t len) {
    return std::equal(u.begin() + upos, u.begin() + upos + len, v.begin() + vpos);
}

}  // namespace

std::vector<std::pair<Word, Word>> overlaps(const Word& w1, const Word& w2) {
    std::vector<std::pair<Word, Word>> out;
    for (size_t o = 0; o < w1.size(); ++o) {
        size_t m = std::min(w1.size() - o, w2.size());
        if (!equal_range_of(w1, o, w2, 0, m)) continue;
        if (o + w2.size() <= w1.size()) {
            if (o == 0 && w2.size() == w1.size()) continue;
            out.emplace_back(Word(w1.begin(), w1.begin() + o),
                             Word(w1.begin() + o + w2.size(), w1.end()));
        } else if (o > 0) {
            out.emplace_back(Word(w1.begin(), w1.begin() + o), Word(w2.begin() + m, w2.end()));
        }
    }
    return out;
}

void TruncatedGB::append(NcPoly p) {
    auto [lw, lc] = leading_term(p, ord_);
    p *= Rat(1) / lc;
    lead_of_.emplace(lw, basis_.size());
    int len = static_cast<int>(lw.size());
    auto it = std::lower_bound(lead_lengths_.begin(), lead_lengths_.end(), len);
    if (it == lead_lengths_.end() || *it != len) lead_lengths_.insert(it, len);
    basis_.push_back(std::move(p));
}

TruncatedGB::TruncatedGB(const std::vector<NcPoly>& generators, const MonomialOrder& ord,
                         int degree_bound, int alphabet_size)
    : ord_(ord), bound_(degree_bound), nletters_(alphabet_size) {
    if (degree_bound < 2) throw std::invalid_argument("degree bound must be at least 2");
    for (NcPoly& row : graded_row_reduce(generators, ord_, 2)) append(std::move(row));

    for (int d = 3; d <= bound_; ++d) {
        // every obstruction of total degree d between current elements; new
        // elements of degree d only create obstructions of degree > d, so a
        // single pass per degree is complete
        size_t fixed = basis_.size();
        std::vector<Word> lws;
        lws.reserve(fixed);
        for (size_t i = 0; i < fixed; ++i) lws.push_back(leading_term(basis_[i], ord_).first);
        for (size_t i = 0; i < fixed; ++i)
            for (size_t j = 0; j < fixed; ++j)
                for (const auto& [left, right] : overlaps(lws[i], lws[j])) {
                    bool contains = left.size() + lws[j].size() + right.size() == lws[i].size();
                    size_t deg = contains ? lws[i].size() : lws[i].size() + right.size();
                    if (deg != static_cast<size_t>(d)) continue;
                    NcPoly s = contains ? basis_[i] - NcPoly::term(left, 1) * basis_[j] *
                                                          NcPoly::term(right, 1)
                                        : basis_[i] * NcPoly::term(right, 1) -
                                              NcPoly::term(left, 1) * basis_[j];
                    NcPoly nf = normal_form(s);
                    if (!nf.is_zero()) append(std::move(nf));
                }
    }

    // tail reduction; leading words are already pairwise non-overlapping as
    // subwords, so they are stable under this pass
    for (size_t i = 0; i < basis_.size(); ++i) {
        auto [lw, lc] = leading_term(basis_[i], ord_);
        NcPoly tail = basis_[i] - NcPoly::term(lw, lc);
        basis_[i] = NcPoly::term(lw, 1) + normal_form(tail);
    }
}

NcPoly TruncatedGB::normal_form(const NcPoly& p) const {
    std::map<Word, Rat, OrdGreater> work(OrdGreater{&ord_});
    for (const auto& [w, c] : p.terms()) {
        if (static_cast<int>(w.size()) > bound_)
            throw std::invalid_argument("normal_form beyond the degree bound");
        work.emplace(w, c);
    }
    std::vector<std::pair<Word, Rat>> out;
    while (!work.empty()) {
        auto lead = work.begin();
        // copies: the subtraction below erases this node when it cancels
        // the leading term
        const Word w = lead->first;
        const Rat c = lead->second;
        // leftmost position first, then shortest reducer
        const NcPoly* g = nullptr;
        size_t gpos = 0, glen = 0;
        for (size_t pos = 0; pos < w.size() && !g; ++pos)
            for (int len : lead_lengths_) {
                if (pos + len > w.size()) break;
                auto hit = lead_of_.find(Word(w.begin() + pos, w.begin() + pos + len));
                if (hit != lead_of_.end()) {
                    g = &basis_[hit->second];
                    gpos = pos;
                    glen = len;
                    break;
                }
            }
        if (!g) {
            out.emplace_back(w, c);
            work.erase(lead);
            continue;
        }
        for (const auto& [t, k] : g->terms()) {
            Word full(w.begin(), w.begin() + gpos);
            full.insert(full.end(), t.begin(), t.end());
            full.insert(full.end(), w.begin() + gpos + glen, w.end());
            auto it = work.try_emplace(full, 0).first;
            it->second -= c * k;
            if (it->second == 0) work.erase(it);
        }
    }
    return NcPoly::from_terms(std::move(out));
}

int TruncatedGB::max_basis_degree() const {
    int d = 0;
    for (const NcPoly& p : basis_)
        d = std::max(d, static_cast<int>(leading_term(p, ord_).first.size()));
    return d;
}

std::vector<Word> TruncatedGB::leading_words() const {
    std::vector<Word> out;
    out.reserve(basis_.size());
    for (const NcPoly& p : basis_) out.push_back(leading_term(p, ord_).first);
    return out;
}

std::vector<std::vector<Word>> TruncatedGB::normal_words(int max_degree) const {
    if (max_degree > bound_)
        throw std::invalid_argument("normal_words beyond the degree bound");
    std::vector<std::vector<Word>> levels{{Word{}}};
    for (int d = 1; d <= max_degree; ++d) {
        std::vector<Word> next;
        for (const Word& w : levels.back())
            for (int t = 0; t < nletters_; ++t) {
                Word x = w;
                x.push_back(static_cast<uint8_t>(t));
                // a new leading word inside x must end at the last letter
                bool normal = true;
                for (int len : lead_lengths_) {
                    if (len > d) break;
                    if (lead_of_.count(Word(x.end() - len, x.end()))) {
                        normal = false;
                        break;
                    }
                }
                if (normal) next.push_back(std::move(x));
            }
        levels.push_back(std::move(next));
    }
    return levels;
}

std::vector<int64_t> TruncatedGB::dim_vector(int max_degree) const {
    std::vector<int64_t> dims;
    for (const auto& level : normal_words(max_degree))
        dims.push_back(static_cast<int64_t>(level.size()));
    return dims;
}

TruncatedGB groebner_basis(const Presentation& p, int degree_bound) {
    return TruncatedGB(p.relations, MonomialOrder::deglex_default(p.alphabet), degree_bound,
                       p.alphabet.size());
}

std::string render_gb(const TruncatedGB& gb, const Alphabet& a) {
    std::string out = "degree bound: " + std::to_string(gb.degree_bound()) + "\n";
    const auto& basis = gb.basis();
    for (size_t i = 0; i < basis.size(); ++i) {
        out += 'g';
        out += std::to_string(i + 1);
        out += " = ";
        out += render_poly(basis[i], a, gb.order());
        out += '\n';
    }
    return out;
}

}  // namespace koszul
