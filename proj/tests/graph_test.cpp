#include <doctest.h>

#include "cdp/errors.hpp"
#include "cdp/graph.hpp"
#include "support.hpp"

using namespace cdp;
using namespace support;

TEST_CASE("graph construction validates input") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), InputError);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), InputError);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), InputError);
    Graph g(3, {{1, 2}, {0, 1}});
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("closed neighborhood") {
    Graph p3 = path_graph(3);
    CHECK(closed_neighborhood(p3, 1) == VertexSet({0, 1, 2}));
    Graph lonely(1, {});
    CHECK(closed_neighborhood(lonely, 0) == VertexSet({0}));
    Graph star = star_graph(4);
    CHECK(closed_neighborhood(star, 0) == VertexSet::full(5));
    CHECK_THROWS_AS(closed_neighborhood(p3, 7), InputError);
}

TEST_CASE("boundary") {
    Graph p4 = path_graph(4);
    CHECK(boundary(p4, VertexSet({0})) == VertexSet({1}));
    CHECK(boundary(p4, VertexSet::full(4)) == VertexSet{});
    Graph c5 = cycle_graph(5);
    CHECK(boundary(c5, VertexSet({0})) == VertexSet({1, 4}));
}

TEST_CASE("domination predicates") {
    Graph star = star_graph(3);
    CHECK(is_dominating(star, VertexSet({0})));
    Graph p3 = path_graph(3);
    CHECK_FALSE(is_dominating(p3, VertexSet({0})));
    CHECK(is_dominating(p3, VertexSet::full(3)));
    CHECK_FALSE(is_dominating(p3, VertexSet{}));

    Graph c5 = cycle_graph(5);
    CHECK(is_connected_dominating(c5, VertexSet({0, 1, 2})));
    CHECK_FALSE(is_connected_dominating(c5, VertexSet({0, 2})));
    Graph k4 = complete_graph(4);
    CHECK(is_connected_dominating(k4, VertexSet({2})));
}

TEST_CASE("connected components") {
    Graph p3 = path_graph(3);
    CHECK(connected_components(p3, VertexSet{}).empty());
    auto comps = connected_components(p3, VertexSet({0, 2}));
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet({0}));
    CHECK(comps[1] == VertexSet({2}));
    auto whole = connected_components(p3, VertexSet::full(3));
    REQUIRE(whole.size() == 1);
    CHECK(whole[0] == VertexSet::full(3));
}

TEST_CASE("graph predicates on random graphs") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 200; ++round) {
        int n = 1 + static_cast<int>(draw_below(rng, 7));
        Graph g = random_connected_graph(n, rng);
        VertexSet s = set_from_mask(static_cast<unsigned>(draw_below(rng, 1U << n)), n);

        // boundary is always disjoint from its set
        CHECK(boundary(g, s).set_intersection(s) == VertexSet{});
        // connected dominating implies dominating
        if (is_connected_dominating(g, s)) CHECK(is_dominating(g, s));
        // domination == closed neighborhoods cover everything (connected g)
        VertexSet covered;
        for (int v : s) covered = covered.set_union(closed_neighborhood(g, v));
        CHECK(is_dominating(g, s) == (!s.empty() && covered == VertexSet::full(n)));
        // components partition s
        VertexSet rebuilt;
        for (const auto& comp : connected_components(g, s))
            rebuilt = rebuilt.set_union(comp);
        CHECK(rebuilt == s);
    }
}
