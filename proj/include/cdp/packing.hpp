#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cdp/cds_pipeline.hpp"
#include "cdp/cuts.hpp"
#include "cdp/graph.hpp"

namespace cdp {

struct PackingEntry {
    VertexSet set;
    Rational weight;  // > 0
};

// Weighted collection of connected dominating sets.
struct Packing {
    std::vector<PackingEntry> entries;

    Rational size() const;
    Rational marginal(int v) const;  // total weight of entries containing v
};

struct DecomposeOptions {
    long max_rounds = 100000;
    // Abort once the marginal-bound multiplier would exceed this; 0 = none.
    Rational rho_cap = 0;
};

// Convex combination of connected dominating sets dominated by a feasible
// LP point: weights sum to exactly 1 and every marginal is at most
// rho * x(v). rho starts at 1 and doubles only when pricing stalls.
struct DecompositionResult {
    Packing distribution;
    Rational rho;
    int pricing_rounds = 0;
};

DecompositionResult carr_vempala_decompose(const Graph& g, const FractionalSolution& x,
                                           const DecomposeOptions& options = {});

// Full capacitated pipeline: k = minimum-capacity separator, x = capacity/k,
// decompose, scale weights by k/rho. The result packs size k/rho within the
// capacities, exactly. Requires a connected, non-complete graph with
// strictly positive capacities.
struct CapacitatedPacking {
    Packing packing;
    Rational k;
    Rational rho;
    SeparatorCertificate separator;
    int pricing_rounds = 0;
};

CapacitatedPacking pack_capacitated(const Graph& g, const NodeWeights& capacity,
                                    const DecomposeOptions& options = {});

// Complete graphs have no separator; every singleton is a connected
// dominating set, so each vertex packs at its own capacity. Kept apart from
// the main pipeline, whose parameter k is undefined here.
Packing pack_complete(const Graph& g, const NodeWeights& capacity);

struct PackingReport {
    bool ok = true;
    Rational size;
    // min over vertices of capacity(v) - marginal(v); negative means violation.
    std::optional<Rational> worst_marginal_slack;
    std::vector<std::string> violations;
};

// Checks every entry is a connected dominating set and every marginal stays
// within its capacity, exactly. Verdicts go in the report, never thrown.
PackingReport verify_packing(const Graph& g, const NodeWeights& capacity,
                             const Packing& packing);

}  // namespace cdp
