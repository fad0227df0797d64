#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "koszul/groebner.hpp"

using namespace koszul;

namespace {

// test-side recount of normal words: scan every word of each degree and
// check subword-freeness against the leading words directly
std::vector<int64_t> brute_dims(const TruncatedGB& gb, int nletters, int max_degree) {
    std::set<Word> leads;
    for (const Word& w : gb.leading_words()) leads.insert(w);
    std::vector<int64_t> dims{1};
    std::vector<Word> level{Word{}};
    for (int d = 1; d <= max_degree; ++d) {
        std::vector<Word> next;
        for (const Word& w : level)
            for (int t = 0; t < nletters; ++t) {
                Word x = w;
                x.push_back(static_cast<uint8_t>(t));
                next.push_back(std::move(x));
            }
        level = std::move(next);
        int64_t count = 0;
        for (const Word& w : level) {
            bool normal = true;
            for (size_t i = 0; i < w.size() && normal; ++i)
                for (size_t j = i + 1; j <= w.size() && normal; ++j)
                    if (leads.count(Word(w.begin() + i, w.begin() + j))) normal = false;
            if (normal) ++count;
        }
        dims.push_back(count);
    }
    return dims;
}

}  // namespace

TEST_CASE("anticommutators and squares complete quadratically") {
    Presentation ext = bdual_handwritten(named_family("empty", 3));
    TruncatedGB gb = groebner_basis(ext, 4);
    CHECK(gb.is_quadratic());
    CHECK(gb.basis().size() == 6);
    CHECK(gb.dim_vector(4) == std::vector<int64_t>{1, 3, 3, 1, 0});
}

TEST_CASE("commuting vertex variables give binomial growth") {
    TruncatedGB gb = groebner_basis(q_presentation(named_family("empty", 3)), 4);
    CHECK(gb.is_quadratic());
    CHECK(gb.dim_vector(4) == std::vector<int64_t>{1, 3, 6, 10, 15});
}

TEST_CASE("path algebra dimensions and cubic basis elements") {
    Presentation q = q_presentation(named_family("line", 3));
    TruncatedGB gb = groebner_basis(q, 3);
    CHECK(gb.dim_vector(3) == std::vector<int64_t>{1, 5, 20, 76});
    CHECK(!gb.is_quadratic());
    int cubic = 0;
    for (const Word& w : gb.leading_words()) cubic += w.size() == 3;
    CHECK(cubic == 2);

    // every input relation reduces to zero, and normal_form is idempotent
    for (const NcPoly& r : q.relations) CHECK(gb.normal_form(r).is_zero());
    NcPoly p = q.relations[0] * NcPoly::var(0) + NcPoly::var(1) * q.relations[2];
    CHECK(gb.normal_form(p).is_zero());
    NcPoly nf = gb.normal_form(NcPoly::var(1) * NcPoly::var(0) * NcPoly::var(2));
    CHECK(gb.normal_form(nf) == nf);
    CHECK_THROWS_AS(gb.normal_form(NcPoly::term({0, 0, 0, 0}, 1)), std::invalid_argument);
}

TEST_CASE("overlaps lists collisions with paddings that align the words") {
    using Pads = std::vector<std::pair<Word, Word>>;
    CHECK(overlaps(Word{0, 1}, Word{1, 2}) == Pads{{Word{0}, Word{2}}});
    CHECK(overlaps(Word{1, 2}, Word{0, 1}) == Pads{});
    CHECK(overlaps(Word{0, 0}, Word{0, 0}) == Pads{{Word{0}, Word{0}}});
    CHECK(overlaps(Word{0, 1}, Word{2, 3}) == Pads{});

    // containments of the second word in the first, equality excluded
    CHECK(overlaps(Word{0, 1, 0}, Word{1}) == Pads{{Word{0}, Word{0}}});
    CHECK(overlaps(Word{0, 1}, Word{0}) == Pads{{Word{}, Word{1}}});
    CHECK(overlaps(Word{0, 1}, Word{1}) == Pads{{Word{0}, Word{}}});
    CHECK(overlaps(Word{0, 1}, Word{0, 1}) == Pads{});

    // prefix containment and a length-one overlap, ordered by offset
    CHECK(overlaps(Word{0, 1, 0}, Word{0, 1}) == Pads{{Word{}, Word{0}}, {Word{0, 1}, Word{1}}});

    // every pair from real leading words satisfies an alignment equation
    TruncatedGB gb = groebner_basis(q_presentation(named_family("line", 3)), 3);
    auto cat = [](const Word& a, const Word& b) {
        Word r = a;
        r.insert(r.end(), b.begin(), b.end());
        return r;
    };
    for (const Word& u : gb.leading_words())
        for (const Word& v : gb.leading_words())
            for (const auto& [l, r] : overlaps(u, v))
                CHECK((cat(u, r) == cat(l, v) || u == cat(cat(l, v), r)));
}

TEST_CASE("normal form respects products") {
    TruncatedGB gb = groebner_basis(q_presentation(named_family("line", 3)), 4);
    std::mt19937 rng(910910);
    auto random_poly = [&rng] {
        NcPoly p;
        int terms = 1 + static_cast<int>(rng() % 3);
        for (int t = 0; t < terms; ++t) {
            Word w;
            int len = static_cast<int>(rng() % 3);
            for (int k = 0; k < len; ++k) w.push_back(static_cast<uint8_t>(rng() % 5));
            p.add_term(w, static_cast<int>(rng() % 7) - 3);
        }
        return p;
    };
    for (int iter = 0; iter < 40; ++iter) {
        NcPoly a = random_poly();
        NcPoly b = random_poly();
        CHECK(gb.normal_form(a * b) == gb.normal_form(gb.normal_form(a) * gb.normal_form(b)));
    }
}

TEST_CASE("groebner dimensions agree with the rank oracle") {
    for (const Graph& g : {named_family("line", 3), named_family("complete", 3),
                           named_family("star", 4), named_family("butterfly", 0)}) {
        Presentation q = q_presentation(g);
        TruncatedGB gb = groebner_basis(q, 3);
        CHECK(gb.dim_vector(3) == dims_by_rank(q, 3));
    }
    TruncatedGB k3 = groebner_basis(q_presentation(named_family("complete", 3)), 3);
    CHECK(k3.dim_vector(3) == std::vector<int64_t>{1, 6, 31, 157});
}

TEST_CASE("dual of the flat path algebra has the matching dimensions") {
    Presentation d = quadratic_dual(b_presentation(named_family("line", 3)));
    TruncatedGB gb = groebner_basis(d, 4);
    CHECK(gb.dim_vector(4) == std::vector<int64_t>{1, 5, 5, 1, 0});
}

TEST_CASE("four cycle dimensions") {
    TruncatedGB gb = groebner_basis(q_presentation(named_family("cycle", 4)), 4);
    CHECK(gb.dim_vector(4) == std::vector<int64_t>{1, 8, 48, 264, 1407});
}

TEST_CASE("truncation is stable under a larger bound") {
    Presentation q = q_presentation(named_family("line", 3));
    TruncatedGB small = groebner_basis(q, 3);
    TruncatedGB large = groebner_basis(q, 5);
    CHECK(small.dim_vector(3) == large.dim_vector(3));
    auto words_small = small.normal_words(3);
    auto words_large = large.normal_words(3);
    CHECK(words_small == words_large);
    CHECK_THROWS_AS(small.normal_words(4), std::invalid_argument);
}

TEST_CASE("dim_vector matches the brute-force subword scan") {
    for (const Graph& g : {named_family("line", 3), named_family("complete", 3)}) {
        TruncatedGB gb = groebner_basis(q_presentation(g), 3);
        CHECK(gb.dim_vector(3) == brute_dims(gb, g.n + g.edge_count(), 3));
    }
}

TEST_CASE("single edge basis renders exactly") {
    TruncatedGB gb = groebner_basis(q_presentation(from_edge_list(2, {{1, 2}})), 3);
    Alphabet a = Alphabet::primal(from_edge_list(2, {{1, 2}}));
    CHECK(render_gb(gb, a) ==
          "degree bound: 3\n"
          "g1 = u2*u1 - u1*u2 - u21*u2 + u21*u1\n");
    CHECK(gb.dim_vector(3) == std::vector<int64_t>{1, 3, 8, 21});
}
