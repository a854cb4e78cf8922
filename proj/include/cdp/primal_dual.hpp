#pragma once

#include <vector>

#include "cdp/graph.hpp"

namespace cdp {

// Per-iteration record of the dual-raising loop. `active` is the set of
// still-undominated vertices whose duals were raised uniformly by `raise`;
// `newly_tight` lists the vertices whose dual constraints became tight, in
// ascending id order.
struct PDIteration {
    VertexSet active;
    Rational raise;
    std::vector<int> newly_tight;
};

struct PDTrace {
    std::vector<PDIteration> iterations;
    // Zero-cost seeds (ascending) followed by every newly_tight list in
    // iteration order; the order reverse-delete walks backwards.
    std::vector<int> selection_order;
    VertexSet final_selected;
};

struct PDResult {
    VertexSet dominating_set;  // after reverse-delete
    NodeWeights dual;
    PDTrace trace;
};

// Primal-dual dominating set: raise duals of undominated vertices uniformly,
// take all vertices that become tight, finish with reverse-delete.
// Deterministic; requires a connected graph and nonnegative costs.
PDResult primal_dual_ds(const Graph& g, const NodeWeights& cost);

// Walks selection_order backwards, dropping a vertex whenever the remainder
// still dominates. selection_order must be a permutation of `selected`.
VertexSet reverse_delete(const Graph& g, const VertexSet& selected,
                         const std::vector<int>& selection_order);

struct GammaBoundReport {
    bool holds;
    Rational worst_ratio;
};

// Checks, per iteration, that the active-set charge against the surviving
// vertices stays within 1 + 4*c_prime, where c_prime bounds edges/vertices
// for the declared graph family. Returns the worst ratio observed.
GammaBoundReport check_gamma_bound(const Graph& g, const PDTrace& trace,
                                   const VertexSet& result_set,
                                   const Rational& c_prime);

// Checks |W_i| <= |A_i| for every iteration, where W_i is the surviving set
// minus the vertices selected before iteration i, by exhibiting an injective
// witness map from W_i into A_i.
bool check_witness_lemma(const Graph& g, const PDTrace& trace,
                         const VertexSet& result_set);

}  // namespace cdp
