#pragma once

#include <cstdint>
#include <optional>

#include "cdp/graph.hpp"
#include "cdp/lp.hpp"
#include "cdp/primal_dual.hpp"

namespace cdp {

// Result of rounding a fractional point to a connected dominating set: the
// dominating part comes from the primal-dual algorithm, the connector from
// the spider greedy run with the dominating part as free terminals.
struct CDSRounding {
    VertexSet cds;
    VertexSet ds_part;
    VertexSet connector_part;  // cds minus ds_part
    Rational cost;
    // cost / (cost-weighted value of the input point), when that value is > 0.
    std::optional<Rational> certified_r;
};

// Exact optimum of the connected-dominating-set LP: explicit domination rows
// plus generated separator rows. Requires a connected graph with n >= 2.
LPResult solve_cds_lp(const Graph& g, const NodeWeights& cost);

// Rounds a feasible point of the connected-dominating-set LP; throws
// InputError (carrying the violated constraint) if the point is infeasible.
// The output always satisfies is_connected_dominating.
CDSRounding round_cds(const Graph& g, const NodeWeights& cost,
                      const FractionalSolution& x);

// Same rounding without re-verifying feasibility of x; for callers that
// already hold a feasibility certificate.
CDSRounding round_cds_unverified(const Graph& g, const NodeWeights& cost,
                                 const FractionalSolution& x);

// Randomized rounding for the plain dominating-set LP: vertex v is kept with
// probability min(c * ln(n) * x(v), 1), independently, from a seeded
// generator. The result may fail to dominate; callers check and retry.
VertexSet randomized_ds_round(const Graph& g, const FractionalSolution& x,
                              const Rational& c, std::uint64_t seed);

}  // namespace cdp
