#include <doctest.h>

#include "cdp/errors.hpp"
#include "cdp/oracles.hpp"
#include "cdp/packing.hpp"
#include "support.hpp"

using namespace cdp;
using namespace support;

TEST_CASE("decomposing an indicator point returns the set itself") {
    Graph p3 = path_graph(3);
    FractionalSolution mid(3, Rational(0));
    mid[1] = 1;
    auto result = carr_vempala_decompose(p3, mid);
    REQUIRE(result.distribution.entries.size() == 1);
    CHECK(result.distribution.entries[0].set == VertexSet({1}));
    CHECK(result.distribution.entries[0].weight == 1);
    CHECK(result.rho == 1);

    Graph star = star_graph(3);
    FractionalSolution hub(4, Rational(0));
    hub[0] = 1;
    auto star_result = carr_vempala_decompose(star, hub);
    REQUIRE(star_result.distribution.entries.size() == 1);
    CHECK(star_result.distribution.entries[0].set == VertexSet({0}));
    CHECK(star_result.rho == 1);
}

TEST_CASE("decomposing the half cycle") {
    Graph c5 = cycle_graph(5);
    FractionalSolution half(5, Q(1, 2));
    auto result = carr_vempala_decompose(c5, half);
    Rational total = 0;
    for (const auto& e : result.distribution.entries) {
        CHECK(is_connected_dominating(c5, e.set));
        CHECK(sgn(e.weight) > 0);
        total += e.weight;
    }
    CHECK(total == 1);
    for (int v = 0; v < 5; ++v)
        CHECK(result.distribution.marginal(v) <= result.rho * half[v]);
    // the exact column LP caps the packing at 5/3, so rho = 1 cannot close
    // and one doubling suffices
    CHECK(result.rho == 2);
}

TEST_CASE("decompose rejects infeasible points and enforces the rho cap") {
    Graph c4 = cycle_graph(4);
    CHECK_THROWS_AS(carr_vempala_decompose(c4, FractionalSolution(4, Q(1, 4))),
                    InputError);
    Graph c5 = cycle_graph(5);
    DecomposeOptions tight;
    tight.rho_cap = 1;
    CHECK_THROWS_AS(carr_vempala_decompose(c5, FractionalSolution(5, Q(1, 2)), tight),
                    ResourceError);
}

TEST_CASE("capacitated packing fixtures") {
    auto p3 = pack_capacitated(path_graph(3), units(3));
    CHECK(p3.k == 1);
    REQUIRE(p3.packing.entries.size() == 1);
    CHECK(p3.packing.entries[0].set == VertexSet({1}));
    CHECK(p3.packing.entries[0].weight == 1);
    CHECK(p3.packing.size() == 1);

    auto c5 = pack_capacitated(cycle_graph(5), units(5));
    CHECK(c5.k == 2);
    CHECK(c5.packing.size() == c5.k / c5.rho);
    CHECK(verify_packing(cycle_graph(5), units(5), c5.packing).ok);

    NodeWeights star_caps = weights_of({5, 1, 1, 1});
    auto star = pack_capacitated(star_graph(3), star_caps);
    CHECK(star.k == 5);
    REQUIRE(star.packing.entries.size() == 1);
    CHECK(star.packing.entries[0].set == VertexSet({0}));
    CHECK(star.packing.entries[0].weight == 5);
    CHECK(star.packing.size() == 5);
    CHECK(star.packing.marginal(0) == 5);
}

TEST_CASE("capacitated packing rejects bad structure") {
    CHECK_THROWS_AS(pack_capacitated(complete_graph(3), units(3)), CompleteGraphError);
    CHECK_THROWS_AS(pack_capacitated(Graph(4, {{0, 1}, {2, 3}}), units(4)),
                    StructuralError);
    CHECK_THROWS_AS(pack_capacitated(path_graph(3), weights_of({1, 0, 1})), InputError);
}

TEST_CASE("complete graphs pack every singleton at capacity") {
    Graph k4 = complete_graph(4);
    NodeWeights caps = weights_of({1, 2, 3, 4});
    Packing packing = pack_complete(k4, caps);
    CHECK(packing.size() == 10);
    CHECK(verify_packing(k4, caps, packing).ok);
    CHECK_THROWS_AS(pack_complete(path_graph(3), units(3)), InputError);
}

TEST_CASE("verify packing flags violations") {
    Graph p3 = path_graph(3);
    Packing bogus;
    bogus.entries.push_back({VertexSet({0}), Rational(1)});
    auto report = verify_packing(p3, units(3), bogus);
    CHECK_FALSE(report.ok);
    REQUIRE(report.violations.size() == 1);

    Packing empty;
    auto empty_report = verify_packing(p3, units(3), empty);
    CHECK(empty_report.ok);
    CHECK(empty_report.size == 0);

    Packing overweight;
    overweight.entries.push_back({VertexSet({1}), Rational(2)});
    auto over_report = verify_packing(p3, units(3), overweight);
    CHECK_FALSE(over_report.ok);
    CHECK(*over_report.worst_marginal_slack == -1);
}

TEST_CASE("scaling capacities scales the packing") {
    Graph c5 = cycle_graph(5);
    auto base = pack_capacitated(c5, units(5));
    NodeWeights tripled(5, Rational(3));
    auto scaled = pack_capacitated(c5, tripled);
    CHECK(scaled.k == 3 * base.k);
    CHECK(scaled.rho == base.rho);
    CHECK(scaled.packing.size() == 3 * base.packing.size());
    REQUIRE(scaled.packing.entries.size() == base.packing.entries.size());
    for (size_t i = 0; i < base.packing.entries.size(); ++i) {
        CHECK(scaled.packing.entries[i].set == base.packing.entries[i].set);
        CHECK(scaled.packing.entries[i].weight == 3 * base.packing.entries[i].weight);
    }
}

TEST_CASE("packing pipeline postconditions on random graphs") {
    std::mt19937_64 rng(79);
    int tested = 0;
    while (tested < 40) {
        int n = 3 + static_cast<int>(draw_below(rng, 4));
        Graph g = random_connected_graph(n, rng);
        if (g.is_complete()) continue;
        ++tested;
        NodeWeights caps = random_small_weights(n, rng, 1, 6);
        auto packed = pack_capacitated(g, caps);
        auto report = verify_packing(g, caps, packed.packing);
        CHECK(report.ok);
        CHECK(packed.packing.size() == packed.k / packed.rho);
        // weak duality: no packing beats the separator capacity
        auto [best, oracle_packing] = exact_fractional_cds_packing(g, caps);
        CHECK(packed.packing.size() <= best);
        CHECK(best <= packed.k);
    }
}
