#include "koszul/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace koszul {

bool Graph::has_edge(int i, int j) const {
    if (i == j) return false;
    std::pair<int, int> e{std::max(i, j), std::min(i, j)};
    return std::binary_search(edges.begin(), edges.end(), e);
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    Graph g;
    g.n = n;
    for (auto [i, j] : pairs) {
        if (i == j)
            throw std::invalid_argument("loop edge (" + std::to_string(i) + "," +
                                        std::to_string(j) + ")");
        if (i < 1 || i > n || j < 1 || j > n)
            throw std::invalid_argument("edge (" + std::to_string(i) + "," + std::to_string(j) +
                                        ") out of range 1.." + std::to_string(n));
        g.edges.emplace_back(std::max(i, j), std::min(i, j));
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

Graph named_family(std::string_view name, int n) {
    std::vector<std::pair<int, int>> e;
    if (name == "empty") {
        if (n < 1) throw std::invalid_argument("empty: need n >= 1");
        return from_edge_list(n, {});
    }
    if (name == "line") {
        if (n < 1) throw std::invalid_argument("line: need n >= 1");
        for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
        return from_edge_list(n, e);
    }
    if (name == "star") {
        if (n < 1) throw std::invalid_argument("star: need n >= 1");
        for (int i = 2; i <= n; ++i) e.emplace_back(1, i);
        return from_edge_list(n, e);
    }
    if (name == "cycle") {
        if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
        for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
        e.emplace_back(n, 1);
        return from_edge_list(n, e);
    }
    if (name == "complete") {
        if (n < 1) throw std::invalid_argument("complete: need n >= 1");
        for (int i = 2; i <= n; ++i)
            for (int j = 1; j < i; ++j) e.emplace_back(i, j);
        return from_edge_list(n, e);
    }
    if (name == "butterfly") {
        if (n > 0 && n != 5) throw std::invalid_argument("butterfly: fixed at n = 5");
        return from_edge_list(5, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {1, 5}, {4, 5}});
    }
    if (name == "diamond") {
        if (n > 0 && n != 4) throw std::invalid_argument("diamond: fixed at n = 4");
        return from_edge_list(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}});
    }
    throw std::invalid_argument("unknown family: " + std::string(name));
}

std::vector<Triangle> triangles(const Graph& g) {
    std::vector<Triangle> out;
    for (int a = 3; a <= g.n; ++a)
        for (int b = 2; b < a; ++b) {
            if (!g.has_edge(a, b)) continue;
            for (int c = 1; c < b; ++c)
                if (g.has_edge(a, c) && g.has_edge(b, c)) out.push_back({a, b, c});
        }
    std::sort(out.begin(), out.end(), [](const Triangle& x, const Triangle& y) {
        return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
    });
    return out;
}

bool is_triangle_free(const Graph& g) { return triangles(g).empty(); }

bool has_overlapping_triangles(const Graph& g) {
    auto tri = triangles(g);
    for (size_t i = 0; i < tri.size(); ++i)
        for (size_t j = i + 1; j < tri.size(); ++j) {
            int va[3] = {tri[i].a, tri[i].b, tri[i].c};
            int vb[3] = {tri[j].a, tri[j].b, tri[j].c};
            for (int x : va)
                for (int y : vb)
                    if (x == y) return true;
        }
    return false;
}

namespace {

// Edge slot index in the ascending (hi, lo) enumeration:
// (2,1)=0, (3,1)=1, (3,2)=2, (4,1)=3, ...
int slot(int hi, int lo) { return (hi - 1) * (hi - 2) / 2 + (lo - 1); }

uint32_t edge_mask(const Graph& g) {
    uint32_t m = 0;
    for (auto [hi, lo] : g.edges) m |= uint32_t(1) << slot(hi, lo);
    return m;
}

Graph mask_to_graph(uint32_t mask, int n) {
    Graph g;
    g.n = n;
    for (int hi = 2; hi <= n; ++hi)
        for (int lo = 1; lo < hi; ++lo)
            if (mask >> slot(hi, lo) & 1) g.edges.emplace_back(hi, lo);
    return g;
}

// Edge sets of equal size compare lexicographically as sorted pair lists,
// which reduces to: the set holding the lowest differing slot is smaller.
bool mask_less(uint32_t a, uint32_t b) {
    uint32_t d = a ^ b;
    if (d == 0) return false;
    return a >> std::countr_zero(d) & 1;
}

struct CanonSearch {
    int n;
    const uint32_t* adj;  // adjacency bitmask per original vertex (bit v-1)
    uint32_t target;      // mask we compare against
    int labels[9];        // labels[k-1] = original vertex given new label k
    bool used[9];
    bool found_smaller;
    bool track_best;
    uint32_t best;

    // Block of edge bits contributed by new label k against labels 1..k-1.
    uint32_t block(int k) const {
        uint32_t m = 0;
        uint32_t a = adj[labels[k - 1] - 1];
        for (int l = 1; l < k; ++l)
            if (a >> (labels[l - 1] - 1) & 1) m |= uint32_t(1) << slot(k, l);
        return m;
    }

    // eq: relabeled prefix equals the reference prefix so far.
    // prefix: accumulated relabeled bits (valid below block k).
    void dfs(int k, bool eq, uint32_t prefix) {
        if (found_smaller && !track_best) return;
        if (k > n) {
            if (track_best && mask_less(prefix, best)) best = prefix;
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[v - 1]) continue;
            used[v - 1] = true;
            labels[k - 1] = v;
            uint32_t b = block(k);
            uint32_t ref = target & (((uint32_t(1) << slot(k + 1, 1)) - 1) ^
                                     ((uint32_t(1) << slot(k, 1)) - 1));
            bool next_eq = eq;
            bool descend = true;
            if (eq) {
                if (b != ref) {
                    next_eq = false;
                    if (mask_less(b, ref)) {  // blocks occupy the same slot range
                        found_smaller = true;
                        if (!track_best) {
                            used[v - 1] = false;
                            return;
                        }
                    } else {
                        descend = false;  // strictly larger prefix, prune
                    }
                }
            }
            if (descend) dfs(k + 1, next_eq, prefix | b);
            used[v - 1] = false;
            if (found_smaller && !track_best) return;
        }
    }
};

void vertex_adjacency(uint32_t mask, int n, uint32_t adj[8]) {
    for (int v = 0; v < n; ++v) adj[v] = 0;
    for (int hi = 2; hi <= n; ++hi)
        for (int lo = 1; lo < hi; ++lo)
            if (mask >> slot(hi, lo) & 1) {
                adj[hi - 1] |= uint32_t(1) << (lo - 1);
                adj[lo - 1] |= uint32_t(1) << (hi - 1);
            }
}

bool is_canonical_mask(uint32_t mask, int n, const uint32_t adj[8]) {
    CanonSearch s;
    s.n = n;
    s.adj = adj;
    s.target = mask;
    s.found_smaller = false;
    s.track_best = false;
    s.best = mask;
    std::fill(std::begin(s.used), std::end(s.used), false);
    s.dfs(1, true, 0);
    return !s.found_smaller;
}

uint32_t canonical_mask(uint32_t mask, int n) {
    uint32_t adj[8];
    vertex_adjacency(mask, n, adj);
    // Min over all relabelings; pruning compares against the running best.
    uint32_t best = mask;
    for (;;) {
        CanonSearch s;
        s.n = n;
        s.adj = adj;
        s.target = best;
        s.found_smaller = false;
        s.track_best = true;
        s.best = best;
        std::fill(std::begin(s.used), std::end(s.used), false);
        s.dfs(1, true, 0);
        if (!mask_less(s.best, best)) return best;
        best = s.best;
    }
}

}  // namespace

Graph canonical_form(const Graph& g) {
    if (g.n > 8) throw std::invalid_argument("canonical_form: n > 8 unsupported");
    return mask_to_graph(canonical_mask(edge_mask(g), g.n), g.n);
}

bool are_isomorphic(const Graph& g1, const Graph& g2) {
    if (g1.n != g2.n) return false;
    if (g1.edge_count() != g2.edge_count()) return false;
    return canonical_form(g1).edges == canonical_form(g2).edges;
}

std::vector<Graph> enumerate_graphs(int max_n, bool no_isolated) {
    if (max_n < 1 || max_n > 7)
        throw std::invalid_argument("enumerate_graphs: max_n must be in 1..7");
    std::vector<Graph> out;
    auto run = [&](int n) {
        int slots = n * (n - 1) / 2;
        std::vector<uint32_t> pairbits(slots);
        for (int hi = 2; hi <= n; ++hi)
            for (int lo = 1; lo < hi; ++lo)
                pairbits[slot(hi, lo)] = (uint32_t(1) << (hi - 1)) | (uint32_t(1) << (lo - 1));
        uint32_t full = (n >= 1) ? (uint32_t(1) << n) - 1 : 0;
        for (uint32_t mask = 0; mask < (uint32_t(1) << slots); ++mask) {
            if (no_isolated) {
                uint32_t covered = 0;
                uint32_t m = mask;
                while (m) {
                    covered |= pairbits[std::countr_zero(m)];
                    m &= m - 1;
                }
                if (covered != full) continue;
            }
            uint32_t adj[8];
            vertex_adjacency(mask, n, adj);
            if (is_canonical_mask(mask, n, adj)) out.push_back(mask_to_graph(mask, n));
        }
    };
    if (no_isolated) {
        for (int n = 2; n <= max_n; ++n) run(n);
    } else {
        run(max_n);
    }
    return out;
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<std::pair<int, int>> pairs;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n)) {
                std::string tok;
                std::istringstream probe(line);
                if (probe >> tok)
                    throw std::invalid_argument("line " + std::to_string(lineno) +
                                                ": expected vertex count, got '" + tok + "'");
                n = -1;  // blank line before header
                continue;
            }
            std::string rest;
            if (ls >> rest)
                throw std::invalid_argument("line " + std::to_string(lineno) +
                                            ": trailing token '" + rest + "' after vertex count");
            continue;
        }
        int i, j;
        if (!(ls >> i)) continue;  // blank or comment-only line
        if (!(ls >> j))
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": expected two vertex numbers");
        std::string rest;
        if (ls >> rest)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": trailing token '" +
                                        rest + "'");
        try {
            if (i == j || i < 1 || i > n || j < 1 || j > n) {
                from_edge_list(n, {{i, j}});  // throws with a precise message
            }
        } catch (const std::invalid_argument& ex) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + ex.what());
        }
        pairs.emplace_back(i, j);
    }
    if (n < 0) throw std::invalid_argument("missing vertex count line");
    return from_edge_list(n, pairs);
}

Graph parse_edge_list_text(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

Graph parse_graph6(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("graph6: empty input");
    size_t pos = 0;
    if (s[0] == ':' || s[0] == '&') throw std::invalid_argument("graph6: unsupported variant");
    int n;
    if (s[0] == 126) throw std::invalid_argument("graph6: n > 62 unsupported");
    n = s[pos++] - 63;
    if (n < 0 || n > 62) throw std::invalid_argument("graph6: bad vertex count byte");
    int nbits = n * (n - 1) / 2;
    int nbytes = (nbits + 5) / 6;
    if (static_cast<int>(s.size()) - static_cast<int>(pos) != nbytes)
        throw std::invalid_argument("graph6: wrong length for n = " + std::to_string(n));
    std::vector<std::pair<int, int>> pairs;
    int bit = 0;
    for (int hi = 2; hi <= n; ++hi)
        for (int lo = 1; lo < hi; ++lo, ++bit) {
            char c = s[pos + bit / 6];
            if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
            int v = c - 63;
            if (v >> (5 - bit % 6) & 1) pairs.emplace_back(hi, lo);
        }
    return from_edge_list(n, pairs);
}

namespace {
bool embed(const Graph& host, const Graph& pattern, std::vector<int>& map, std::vector<bool>& used,
           int k) {
    if (k > pattern.n) return true;
    for (int v = 1; v <= host.n; ++v) {
        if (used[v]) continue;
        bool ok = true;
        for (int l = 1; l < k && ok; ++l)
            if (pattern.has_edge(k, l) && !host.has_edge(v, map[l])) ok = false;
        if (!ok) continue;
        map[k] = v;
        used[v] = true;
        if (embed(host, pattern, map, used, k + 1)) return true;
        used[v] = false;
    }
    return false;
}
}  // namespace

bool contains_subgraph(const Graph& host, const Graph& pattern) {
    if (pattern.n > host.n) return false;
    std::vector<int> map(pattern.n + 1, 0);
    std::vector<bool> used(host.n + 1, false);
    return embed(host, pattern, map, used, 1);
}

}  // namespace koszul
