#pragma once

#include <optional>

#include "cdp/graph.hpp"

namespace cdp {

// A node separator together with the two sides it certifies. side_a and
// side_b are nonempty, disjoint from each other and from the separator, and
// no edge of the graph joins them. capacity is the separator's total weight.
struct SeparatorCertificate {
    VertexSet separator;
    VertexSet side_a;
    VertexSet side_b;
    Rational capacity;
};

// A violated covering constraint found by a separation oracle. For
// Domination the row is the closed neighborhood of `vertex`; for Separator
// the row is the boundary of `inside_set`. slack = row mass - 1 < 0.
struct ViolatedConstraint {
    enum class Kind { Domination, Separator };
    Kind kind;
    int vertex = -1;
    VertexSet inside_set;
    VertexSet row;
    Rational slack;

    std::string describe() const;
};

// Minimum-weight set of vertices (excluding s and t) whose removal separates
// s from t, by node splitting and max-flow over exact rationals.
// s and t must be distinct and non-adjacent; if they sit in different
// components the cut is empty with capacity 0.
SeparatorCertificate min_vertex_cut(const Graph& g, const NodeWeights& weights,
                                    int s, int t);

// Minimum-capacity node separator over all non-adjacent pairs. Ties broken
// toward the lexicographically smallest separator among minimum cuts found.
// Throws CompleteGraphError when no separator exists.
// The fixed-source sweep heuristic is only valid for uniform capacities and
// is off by default.
SeparatorCertificate min_capacity_separator(const Graph& g, const NodeWeights& capacity,
                                            bool fixed_source_sweep = false);

// Separation oracle for the connected-dominating-set LP: most violated
// domination constraint first, then the most violated separator constraint,
// std::nullopt iff x is feasible. Exact comparisons throughout.
std::optional<ViolatedConstraint> separate_cds_lp(const Graph& g,
                                                  const FractionalSolution& x);

// Separation oracle for the node-weighted Steiner tree LP: a terminal-
// separating set whose boundary has x-mass < 1, or std::nullopt.
// The boundary may contain terminals.
std::optional<ViolatedConstraint> separate_nwst_lp(const Graph& g,
                                                   const FractionalSolution& x,
                                                   const VertexSet& terminals);

}  // namespace cdp
