#include "koszul/freealg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace koszul {

Alphabet::Alphabet(const Graph& g, char prefix) : prefix_(prefix), n_(g.n) {
    if (g.n + g.edge_count() > 255)
        throw std::invalid_argument("alphabet too large");
    for (int i = 1; i <= g.n; ++i) vars_.push_back({false, i, 0});
    for (auto [hi, lo] : g.edges) vars_.push_back({true, hi, lo});
}

uint8_t Alphabet::vertex_letter(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("vertex_letter");
    return static_cast<uint8_t>(i - 1);
}

int Alphabet::edge_letter(int i, int j) const {
    Variable v{true, std::max(i, j), std::min(i, j)};
    for (int t = n_; t < size(); ++t)
        if (vars_[t] == v) return t;
    return -1;
}

std::string Alphabet::name(int letter) const {
    const Variable& v = vars_[letter];
    std::string s(1, prefix_);
    s += std::to_string(v.a);
    if (v.is_edge) s += std::to_string(v.b);
    return s;
}

MonomialOrder MonomialOrder::deglex_default(const Alphabet& a) {
    MonomialOrder o;
    int ne = a.edge_count();
    o.rank_.resize(a.size());
    for (int t = 0; t < a.size(); ++t)
        o.rank_[t] = t < a.vertex_count() ? ne + t : t - a.vertex_count();
    return o;
}

MonomialOrder MonomialOrder::deglex_reverse_edges(const Alphabet& a) {
    MonomialOrder o = deglex_default(a);
    int ne = a.edge_count();
    for (int t = a.vertex_count(); t < a.size(); ++t)
        o.rank_[t] = ne - 1 - o.rank_[t];
    return o;
}

int MonomialOrder::compare(const Word& w1, const Word& w2) const {
    if (w1.size() != w2.size()) return w1.size() < w2.size() ? -1 : 1;
    for (size_t i = 0; i < w1.size(); ++i) {
        int r1 = rank_[w1[i]], r2 = rank_[w2[i]];
        if (r1 != r2) return r1 < r2 ? -1 : 1;
    }
    return 0;
}

int word_cmp(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

NcPoly NcPoly::term(Word w, Rat c) {
    NcPoly p;
    if (c != 0) p.terms_.emplace_back(std::move(w), std::move(c));
    return p;
}

NcPoly NcPoly::from_terms(std::vector<std::pair<Word, Rat>> ts) {
    std::sort(ts.begin(), ts.end(),
              [](const auto& x, const auto& y) { return word_cmp(x.first, y.first) < 0; });
    NcPoly p;
    for (auto& [w, c] : ts) {
        if (!p.terms_.empty() && p.terms_.back().first == w)
            p.terms_.back().second += c;
        else
            p.terms_.emplace_back(std::move(w), std::move(c));
    }
    std::erase_if(p.terms_, [](const auto& t) { return t.second == 0; });
    return p;
}

void NcPoly::add_term(const Word& w, const Rat& c) {
    if (c == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                               [](const auto& t, const Word& x) { return word_cmp(t.first, x) < 0; });
    if (it != terms_.end() && it->first == w) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else {
        terms_.insert(it, {w, c});
    }
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
    if (o.terms_.empty()) return *this;
    std::vector<std::pair<Word, Rat>> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        int c = i == terms_.size() ? 1 : j == o.terms_.size() ? -1
                                       : word_cmp(terms_[i].first, o.terms_[j].first);
        if (c < 0) {
            merged.push_back(std::move(terms_[i++]));
        } else if (c > 0) {
            merged.push_back(o.terms_[j++]);
        } else {
            Rat s = terms_[i].second + o.terms_[j].second;
            if (s != 0) merged.emplace_back(std::move(terms_[i].first), std::move(s));
            ++i, ++j;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) { return *this += -o; }

NcPoly NcPoly::operator-() const {
    NcPoly p = *this;
    for (auto& [w, c] : p.terms_) c = -c;
    return p;
}

NcPoly& NcPoly::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, k] : terms_) k *= c;
    return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
    std::map<Word, Rat, decltype([](const Word& x, const Word& y) { return word_cmp(x, y) < 0; })>
        acc;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            acc[std::move(w)] += ca * cb;
        }
    NcPoly p;
    for (auto& [w, c] : acc)
        if (c != 0) p.terms_.emplace_back(w, c);
    return p;
}

int NcPoly::homogeneous_degree() const {
    if (terms_.empty()) return -1;
    size_t d = terms_.front().first.size();
    for (const auto& [w, c] : terms_)
        if (w.size() != d) throw std::invalid_argument("inhomogeneous polynomial");
    return static_cast<int>(d);
}

NcPoly commutator(const NcPoly& a, const NcPoly& b) { return a * b - b * a; }

std::pair<Word, Rat> leading_term(const NcPoly& p, const MonomialOrder& ord) {
    if (p.is_zero()) throw std::invalid_argument("leading_term of zero polynomial");
    const auto* best = &p.terms().front();
    for (const auto& t : p.terms())
        if (ord.compare(t.first, best->first) > 0) best = &t;
    return *best;
}

std::vector<NcPoly> graded_row_reduce(const std::vector<NcPoly>& polys, const MonomialOrder& ord,
                                      int degree) {
    std::vector<NcPoly> rows;
    std::vector<Word> lws;
    auto find_pivot_in = [&](const NcPoly& p) -> int {
        // any term matching an existing pivot word; rows are kept mutually
        // reduced so one matching term at a time suffices
        for (const auto& [w, c] : p.terms())
            for (size_t r = 0; r < lws.size(); ++r)
                if (w == lws[r]) return static_cast<int>(r);
        return -1;
    };
    for (const NcPoly& input : polys) {
        if (input.is_zero()) continue;
        if (input.homogeneous_degree() != degree)
            throw std::invalid_argument("graded_row_reduce: degree mismatch");
        NcPoly p = input;
        for (;;) {
            int r = find_pivot_in(p);
            if (r < 0) break;
            Rat c;
            for (const auto& [w, k] : p.terms())
                if (w == lws[r]) c = k;
            NcPoly sub = rows[r];
            sub *= c;
            p -= sub;
        }
        if (p.is_zero()) continue;
        auto [lw, lc] = leading_term(p, ord);
        p *= Rat(1) / lc;
        // back-reduce existing rows against the new pivot
        for (size_t r = 0; r < rows.size(); ++r) {
            Rat c;
            bool hit = false;
            for (const auto& [w, k] : rows[r].terms())
                if (w == lw) c = k, hit = true;
            if (hit) {
                NcPoly sub = p;
                sub *= c;
                rows[r] -= sub;
            }
        }
        rows.push_back(std::move(p));
        lws.push_back(lw);
    }
    std::vector<size_t> idx(rows.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(),
              [&](size_t i, size_t j) { return ord.compare(lws[i], lws[j]) > 0; });
    std::vector<NcPoly> out;
    out.reserve(rows.size());
    for (size_t i : idx) out.push_back(std::move(rows[i]));
    return out;
}

namespace {

struct OrdGreater {
    const MonomialOrder* ord;
    bool operator()(const Word& a, const Word& b) const { return ord->compare(a, b) > 0; }
};

}  // namespace

std::vector<NcPoly> span_echelon(const std::vector<NcPoly>& rows, const MonomialOrder& ord) {
    std::vector<NcPoly> basis;
    std::unordered_map<Word, size_t, WordHash> pivot_of;
    std::map<Word, Rat, OrdGreater> work(OrdGreater{&ord});
    for (const NcPoly& row : rows) {
        work.clear();
        for (const auto& [w, c] : row.terms()) work.emplace(w, c);
        while (!work.empty()) {
            auto lead = work.begin();
            auto hit = pivot_of.find(lead->first);
            if (hit == pivot_of.end()) break;
            Rat c = lead->second;
            for (const auto& [w, k] : basis[hit->second].terms()) {
                auto it = work.try_emplace(w, 0).first;
                it->second -= c * k;
                if (it->second == 0) work.erase(it);
            }
        }
        if (work.empty()) continue;
        Rat inv = Rat(1) / work.begin()->second;
        std::vector<std::pair<Word, Rat>> ts;
        ts.reserve(work.size());
        for (auto& [w, c] : work) ts.emplace_back(w, c * inv);
        pivot_of.emplace(work.begin()->first, basis.size());
        basis.push_back(NcPoly::from_terms(std::move(ts)));
    }
    return basis;
}

std::string render_word(const Word& w, const Alphabet& a) {
    if (w.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += '*';
        s += a.name(w[i]);
    }
    return s;
}

std::string render_poly(const NcPoly& p, const Alphabet& a, const MonomialOrder& ord) {
    if (p.is_zero()) return "0";
    std::vector<const std::pair<Word, Rat>*> ts;
    for (const auto& t : p.terms()) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(),
              [&](auto* x, auto* y) { return ord.compare(x->first, y->first) > 0; });
    std::string s;
    for (size_t i = 0; i < ts.size(); ++i) {
        const auto& [w, c] = *ts[i];
        Rat abs = c < 0 ? Rat(-c) : c;
        if (i == 0) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        if (abs != 1 || w.empty()) {
            s += abs.get_str();
            if (!w.empty()) s += "*";
        }
        if (!w.empty()) s += render_word(w, a);
    }
    return s;
}

}  // namespace koszul
