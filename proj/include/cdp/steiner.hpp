#pragma once

#include <optional>

#include "cdp/graph.hpp"
#include "cdp/lp.hpp"

namespace cdp {

struct SteinerInstance {
    Graph graph;
    NodeWeights weights;
    VertexSet terminals;
};

struct SteinerSolution {
    VertexSet nodes;  // connected, contains all terminals
    Rational weight;  // total node weight of `nodes`
    // weight / exact LP optimum, when the LP was solved and its value is > 0.
    std::optional<Rational> certified_ratio;
};

// Greedy spider contraction: repeatedly buy the center-plus-paths star that
// merges >= 2 terminal components at the cheapest weight-per-merge, with
// already-bought vertices at residual weight zero. Deterministic.
SteinerSolution spider_greedy(const SteinerInstance& inst);

// Exact optimum of the terminal-separation LP via row generation.
// Needs at least two terminals.
LPResult solve_nwst_lp(const SteinerInstance& inst);

// spider_greedy plus the exact LP bound, recording weight/LP as the
// per-instance certified ratio (absent when the LP optimum is 0).
SteinerSolution certified_spider_greedy(const SteinerInstance& inst);

}  // namespace cdp
