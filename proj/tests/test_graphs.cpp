#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "koszul/graph.hpp"

using namespace koszul;

TEST_CASE("from_edge_list normalizes and dedupes") {
    Graph g = from_edge_list(4, {{1, 2}, {2, 1}, {3, 1}});
    CHECK(g.n == 4);
    CHECK(g.edges == std::vector<std::pair<int, int>>{{2, 1}, {3, 1}});
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(2, 1));
    CHECK(!g.has_edge(1, 4));
    CHECK(!g.has_edge(2, 2));
}

TEST_CASE("from_edge_list rejects loops and out-of-range") {
    CHECK_THROWS_AS(from_edge_list(3, {{2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(from_edge_list(3, {{1, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(from_edge_list(3, {{0, 1}}), std::invalid_argument);
}

TEST_CASE("named families") {
    Graph star4 = named_family("star", 4);
    CHECK(star4.edges == std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {4, 1}});
    CHECK(named_family("empty", 3).edge_count() == 0);
    CHECK(named_family("line", 1).edge_count() == 0);
    CHECK(named_family("line", 3).edges == std::vector<std::pair<int, int>>{{2, 1}, {3, 2}});
    CHECK(named_family("cycle", 4).edge_count() == 4);
    CHECK(named_family("complete", 5).edge_count() == 10);

    Graph bf = named_family("butterfly", 0);
    CHECK(bf.n == 5);
    CHECK(bf.edges == std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {4, 1}, {5, 1}, {5, 4}});
    Graph dm = named_family("diamond", 0);
    CHECK(dm.n == 4);
    CHECK(dm.edges == std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 3}});

    CHECK_THROWS_AS(named_family("butterfly", 4), std::invalid_argument);
    CHECK_THROWS_AS(named_family("cycle", 2), std::invalid_argument);
    CHECK_THROWS_AS(named_family("blob", 3), std::invalid_argument);
}

TEST_CASE("triangles") {
    CHECK(triangles(named_family("complete", 3)) == std::vector<Triangle>{{3, 2, 1}});
    CHECK(triangles(named_family("line", 3)).empty());
    CHECK(triangles(named_family("diamond", 4)) == std::vector<Triangle>{{3, 2, 1}, {4, 3, 1}});
    CHECK(triangles(named_family("complete", 4)).size() == 4);
}

TEST_CASE("triangle and overlap predicates") {
    CHECK(is_triangle_free(named_family("cycle", 4)));
    CHECK(is_triangle_free(named_family("star", 5)));
    CHECK(!is_triangle_free(named_family("complete", 3)));
    CHECK(!has_overlapping_triangles(named_family("complete", 3)));
    CHECK(has_overlapping_triangles(named_family("butterfly", 0)));
    CHECK(has_overlapping_triangles(named_family("diamond", 0)));
    CHECK(has_overlapping_triangles(named_family("complete", 4)));
    // two vertex-disjoint triangles do not overlap
    Graph two = from_edge_list(6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}});
    CHECK(!has_overlapping_triangles(two));
    CHECK(!is_triangle_free(two));
}

TEST_CASE("isomorphism") {
    Graph p3a = from_edge_list(3, {{1, 2}, {2, 3}});
    Graph p3b = from_edge_list(3, {{1, 3}, {2, 3}});
    Graph k3 = named_family("complete", 3);
    CHECK(are_isomorphic(p3a, p3b));
    CHECK(!are_isomorphic(p3a, k3));
    CHECK(!are_isomorphic(p3a, named_family("line", 4)));
    Graph c5 = named_family("cycle", 5);
    Graph c5r = from_edge_list(5, {{1, 3}, {3, 5}, {5, 2}, {2, 4}, {4, 1}});
    CHECK(are_isomorphic(c5, c5r));
}

TEST_CASE("enumerate_graphs counts") {
    CHECK(enumerate_graphs(2, false).size() == 2);
    CHECK(enumerate_graphs(3, false).size() == 4);
    CHECK(enumerate_graphs(4, true).size() == 10);
    CHECK(enumerate_graphs(5, true).size() == 33);
    CHECK_THROWS_AS(enumerate_graphs(8, true), std::invalid_argument);
}

TEST_CASE("enumerate_graphs yields pairwise non-isomorphic canonical graphs") {
    auto gs = enumerate_graphs(4, true);
    for (size_t i = 0; i < gs.size(); ++i) {
        CHECK(canonical_form(gs[i]).edges == gs[i].edges);
        for (size_t j = i + 1; j < gs.size(); ++j)
            CHECK(!are_isomorphic(gs[i], gs[j]));
    }
    for (const Graph& g : gs) {
        bool isolated = false;
        for (int v = 1; v <= g.n; ++v) {
            bool hit = false;
            for (auto [a, b] : g.edges) hit = hit || a == v || b == v;
            isolated = isolated || !hit;
        }
        CHECK(!isolated);
    }
}

TEST_CASE("overlapping triangles matches butterfly-or-diamond subgraph containment") {
    Graph bf = named_family("butterfly", 0);
    Graph dm = named_family("diamond", 0);
    for (const Graph& g : enumerate_graphs(6, true)) {
        bool sub = contains_subgraph(g, bf) || contains_subgraph(g, dm);
        CHECK(sub == has_overlapping_triangles(g));
    }
}

TEST_CASE("edge list text parsing") {
    Graph g = parse_edge_list_text("# path on three vertices\n3\n1 2\n2 3\n");
    CHECK(g.edges == std::vector<std::pair<int, int>>{{2, 1}, {3, 2}});

    CHECK_THROWS_WITH_AS(parse_edge_list_text("3\n1\n"), doctest::Contains("line 2"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_edge_list_text("3\n1 5\n"), doctest::Contains("line 2"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_edge_list_text("x\n"), doctest::Contains("line 1"),
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list_text("# nothing\n"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_edge_list_text("3\n1 2 3\n"), doctest::Contains("line 2"),
                         std::invalid_argument);
}

TEST_CASE("graph6 parsing") {
    // 'B' = n = 3; K3 packs bits 111000 -> 'w', path packs 101000 -> 'g'.
    CHECK(are_isomorphic(parse_graph6("Bw"), named_family("complete", 3)));
    Graph p3 = parse_graph6("Bg");
    CHECK(p3.n == 3);
    CHECK(p3.edges == std::vector<std::pair<int, int>>{{2, 1}, {3, 2}});
    // 'A' = n = 2, single edge packs 100000 -> '_'.
    CHECK(parse_graph6("A_").edge_count() == 1);
    CHECK(parse_graph6("A?").edge_count() == 0);

    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("B"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("Bww"), std::invalid_argument);
}

TEST_CASE("subgraph containment basics") {
    CHECK(contains_subgraph(named_family("complete", 5), named_family("butterfly", 0)));
    CHECK(!contains_subgraph(named_family("cycle", 6), named_family("complete", 3)));
    CHECK(contains_subgraph(named_family("complete", 4), named_family("diamond", 0)));
}
