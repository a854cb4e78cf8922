#include <doctest.h>

#include "cdp/cds_pipeline.hpp"
#include "cdp/errors.hpp"
#include "cdp/oracles.hpp"
#include "support.hpp"

using namespace cdp;
using namespace support;

TEST_CASE("connected dominating set LP fixtures") {
    auto p3 = solve_cds_lp(path_graph(3), units(3));
    CHECK(p3.value == 1);
    CHECK(p3.x[1] == 1);

    // every separator boundary of the 5-cycle is a pair, so x = 1/2 is tight
    auto c5 = solve_cds_lp(cycle_graph(5), units(5));
    CHECK(c5.value == Q(5, 2));
    CHECK(c5.value == dense_lp_solve(cycle_graph(5), DenseLP::MinCDS, units(5)).value);

    // complete graph: no separator rows, one shared domination row
    auto k3 = solve_cds_lp(complete_graph(3), units(3));
    CHECK(k3.value == 1);

    CHECK_THROWS_AS(solve_cds_lp(Graph(1, {}), units(1)), InputError);
    CHECK_THROWS_AS(solve_cds_lp(Graph(4, {{0, 1}, {2, 3}}), units(4)), InputError);
}

TEST_CASE("rounding the path and star indicators") {
    Graph p3 = path_graph(3);
    FractionalSolution mid(3, Rational(0));
    mid[1] = 1;
    auto rounded = round_cds(p3, units(3), mid);
    CHECK(rounded.cds == VertexSet({1}));
    CHECK(rounded.ds_part == VertexSet({1}));
    CHECK(rounded.connector_part == VertexSet{});
    CHECK(rounded.cost == 1);
    REQUIRE(rounded.certified_r.has_value());
    CHECK(*rounded.certified_r == 1);

    Graph star = star_graph(3);
    FractionalSolution hub(4, Rational(0));
    hub[0] = 1;
    auto star_rounded = round_cds(star, units(4), hub);
    CHECK(star_rounded.cds == VertexSet({0}));
    CHECK(star_rounded.connector_part == VertexSet{});
}

TEST_CASE("rounding the half cycle needs the connector") {
    Graph c5 = cycle_graph(5);
    FractionalSolution half(5, Q(1, 2));
    auto rounded = round_cds(c5, units(5), half);
    CHECK(is_connected_dominating(c5, rounded.cds));
    CHECK(rounded.cds.size() == 3);
    CHECK(rounded.cost == 3);
    REQUIRE(rounded.certified_r.has_value());
    CHECK(*rounded.certified_r == Q(6, 5));
    CHECK(rounded.ds_part.set_union(rounded.connector_part) == rounded.cds);
    CHECK(rounded.connector_part.set_intersection(rounded.ds_part) == VertexSet{});
}

TEST_CASE("rounding rejects infeasible points") {
    Graph c4 = cycle_graph(4);
    CHECK_THROWS_AS(round_cds(c4, units(4), FractionalSolution(4, Q(1, 4))),
                    InputError);
}

TEST_CASE("rounding postconditions across random instances") {
    std::mt19937_64 rng(71);
    for (int round = 0; round < 60; ++round) {
        int n = 2 + static_cast<int>(draw_below(rng, 5));
        Graph g = random_connected_graph(n, rng);
        NodeWeights cost = round % 2 == 0 ? units(n) : random_small_weights(n, rng, 0, 5);
        FractionalSolution x = random_feasible_cds_point(g, rng);
        auto rounded = round_cds(g, cost, x);
        CHECK(is_connected_dominating(g, rounded.cds));
        CHECK(rounded.cost == total_weight(cost, rounded.cds));
        // connector accounting: extra cost is exactly the non-dominating part
        CHECK(rounded.cost == total_weight(cost, rounded.ds_part) +
                                  total_weight(cost, rounded.connector_part));
    }
}

TEST_CASE("feasibility transfers to the relaxed LPs") {
    std::mt19937_64 rng(73);
    for (int round = 0; round < 60; ++round) {
        int n = 2 + static_cast<int>(draw_below(rng, 5));
        Graph g = random_connected_graph(n, rng);
        FractionalSolution x = random_feasible_cds_point(g, rng);
        REQUIRE(cds_lp_feasible_brute(g, x));
        // feasible for the plain dominating-set LP
        for (int v = 0; v < n; ++v)
            CHECK(total_weight(x, closed_neighborhood(g, v)) >= 1);
        // extension by 1 on the rounded dominating set is Steiner-feasible
        auto rounded = round_cds(g, units(n), x);
        if (rounded.ds_part.size() < 2) continue;
        FractionalSolution extended = x;
        for (int v : rounded.ds_part) extended[v] = 1;
        CHECK(nwst_lp_feasible_brute(g, extended, rounded.ds_part));
        CHECK_FALSE(separate_nwst_lp(g, extended, rounded.ds_part).has_value());
    }
}

TEST_CASE("randomized rounding clamps") {
    Graph star = star_graph(3);
    FractionalSolution hub(4, Rational(0));
    hub[0] = 1;
    // scale 10 * ln(4) > 1, so the hub is always kept
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        VertexSet d = randomized_ds_round(star, hub, Rational(10), seed);
        CHECK(d.contains(0));
    }
    // probability-one everywhere
    FractionalSolution ones(4, Rational(1));
    CHECK(randomized_ds_round(star, ones, Rational(10), 5) == VertexSet::full(4));
    // all-zero point draws the empty set
    CHECK(randomized_ds_round(star, FractionalSolution(4, Rational(0)), Rational(10),
                              1) == VertexSet{});
    // deterministic for a fixed seed
    CHECK(randomized_ds_round(star, hub, Rational(10), 9) ==
          randomized_ds_round(star, hub, Rational(10), 9));
}
