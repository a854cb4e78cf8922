#pragma once

#include <utility>
#include <vector>

#include "cdp/rational.hpp"

namespace cdp {

// Set of vertex ids, kept sorted and unique. Lexicographic comparison of the
// member list is the canonical order used for deterministic tie-breaking.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> members);
    static VertexSet full(int n);

    bool contains(int v) const;
    void insert(int v);
    void erase(int v);

    bool empty() const { return members_.empty(); }
    int size() const { return static_cast<int>(members_.size()); }
    const std::vector<int>& members() const { return members_; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    VertexSet set_union(const VertexSet& other) const;
    VertexSet set_difference(const VertexSet& other) const;
    VertexSet set_intersection(const VertexSet& other) const;
    bool is_subset_of(const VertexSet& other) const;

    bool operator==(const VertexSet& other) const { return members_ == other.members_; }
    // Lexicographic on the sorted member list.
    bool operator<(const VertexSet& other) const { return members_ < other.members_; }

private:
    std::vector<int> members_;
};

// Undirected simple graph over dense vertex ids 0..n-1. Neighbor lists are
// sorted ascending; the representation is canonical and immutable.
class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(int u, int v) const;
    // Edges as (u, v) pairs with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;
    int edge_count() const;

    bool is_connected() const;
    bool is_complete() const;

    void check_vertex(int v) const;  // throws InputError on out-of-range ids

private:
    std::vector<std::vector<int>> adjacency_;
};

VertexSet closed_neighborhood(const Graph& g, int v);
// All nodes outside s with a neighbor in s.
VertexSet boundary(const Graph& g, const VertexSet& s);
// Every vertex outside d has a neighbor in d. Empty d is never dominating.
bool is_dominating(const Graph& g, const VertexSet& d);
// d is dominating, nonempty and induces a connected subgraph.
bool is_connected_dominating(const Graph& g, const VertexSet& d);
// Partition of s into maximal connected sets of the induced subgraph,
// ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& s);

Rational total_weight(const NodeWeights& w, const VertexSet& s);

}  // namespace cdp
