#pragma once

#include <utility>
#include <vector>

#include "cdp/graph.hpp"
#include "cdp/lp.hpp"
#include "cdp/packing.hpp"

namespace cdp {

// Brute-force ground truth for small instances. Deliberately naive; budget
// overruns are loud errors, never silent truncation.
struct OracleBudget {
    int max_vertices = 7;       // hard safety limit 20
    long max_sets = 4'000'000;  // cap on enumerated subsets
};

enum class SetKind { DominatingSet, ConnectedDominatingSet };

enum class DenseLP { MinDS, MinCDS, NwST };

// All connected dominating sets, lexicographic by sorted member list.
std::vector<VertexSet> enumerate_cds(const Graph& g, const OracleBudget& budget = {});

// Minimum-cost (connected) dominating set by enumeration; ties broken toward
// the lexicographically smallest member list.
std::pair<VertexSet, Rational> exact_min_cost_set(const Graph& g, const NodeWeights& cost,
                                                  SetKind kind,
                                                  const OracleBudget& budget = {});

// Exact maximum fractional packing of connected dominating sets within the
// capacities, solved over the full column set.
std::pair<Rational, Packing> exact_fractional_cds_packing(const Graph& g,
                                                          const NodeWeights& capacity,
                                                          const OracleBudget& budget = {});

// Exact LP optimum with every constraint materialized; validates the
// row-generation path. `terminals` is used by NwST only.
LPResult dense_lp_solve(const Graph& g, DenseLP which, const NodeWeights& cost,
                        const VertexSet& terminals = {},
                        const OracleBudget& budget = {});

// Constraint-family materializers (deduplicated rows, sorted).
std::vector<VertexSet> domination_rows(const Graph& g);
std::vector<VertexSet> cds_separator_rows(const Graph& g, const OracleBudget& budget = {});
std::vector<VertexSet> nwst_rows(const Graph& g, const VertexSet& terminals,
                                 const OracleBudget& budget = {});

}  // namespace cdp
