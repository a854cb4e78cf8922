#include "cdp/graph.hpp"

#include <algorithm>
#include <numeric>

#include "cdp/errors.hpp"

namespace cdp {

VertexSet::VertexSet(std::vector<int> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::full(int n) {
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    VertexSet s;
    s.members_ = std::move(ids);
    return s;
}

bool VertexSet::contains(int v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::insert(int v) {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it == members_.end() || *it != v) members_.insert(it, v);
}

void VertexSet::erase(int v) {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it != members_.end() && *it == v) members_.erase(it);
}

VertexSet VertexSet::set_union(const VertexSet& other) const {
    VertexSet out;
    out.members_.reserve(members_.size() + other.members_.size());
    std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                   other.members_.end(), std::back_inserter(out.members_));
    return out;
}

VertexSet VertexSet::set_difference(const VertexSet& other) const {
    VertexSet out;
    std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out.members_));
    return out;
}

VertexSet VertexSet::set_intersection(const VertexSet& other) const {
    VertexSet out;
    std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                          other.members_.end(), std::back_inserter(out.members_));
    return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(),
                         members_.begin(), members_.end());
}

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    if (vertex_count < 0) throw InputError("negative vertex count");
    adjacency_.resize(vertex_count);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
            throw InputError("edge endpoint out of range");
        if (u == v) throw InputError("self-loop on vertex " + std::to_string(u));
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (int v = 0; v < vertex_count; ++v) {
        auto& a = adjacency_[v];
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw InputError("parallel edge at vertex " + std::to_string(v));
    }
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adjacency_[v];
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& a = adjacency_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adjacency_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

int Graph::edge_count() const {
    int total = 0;
    for (const auto& a : adjacency_) total += static_cast<int>(a.size());
    return total / 2;
}

bool Graph::is_connected() const {
    int n = vertex_count();
    if (n == 0) return true;
    return connected_components(*this, VertexSet::full(n)).size() == 1;
}

bool Graph::is_complete() const {
    int n = vertex_count();
    for (int v = 0; v < n; ++v)
        if (degree(v) != n - 1) return false;
    return true;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
        throw InputError("invalid vertex id " + std::to_string(v));
}

VertexSet closed_neighborhood(const Graph& g, int v) {
    g.check_vertex(v);
    std::vector<int> ids = g.neighbors(v);
    ids.push_back(v);
    return VertexSet(std::move(ids));
}

VertexSet boundary(const Graph& g, const VertexSet& s) {
    if (!s.empty()) g.check_vertex(s.members().back());
    std::vector<int> out;
    for (int v : s)
        for (int u : g.neighbors(v))
            if (!s.contains(u)) out.push_back(u);
    return VertexSet(std::move(out));
}

bool is_dominating(const Graph& g, const VertexSet& d) {
    if (d.empty()) return false;
    if (!d.empty()) g.check_vertex(d.members().back());
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (d.contains(v)) continue;
        bool covered = false;
        for (int u : g.neighbors(v))
            if (d.contains(u)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

bool is_connected_dominating(const Graph& g, const VertexSet& d) {
    if (d.empty()) return false;
    if (!is_dominating(g, d)) return false;
    return connected_components(g, d).size() == 1;
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& s) {
    if (!s.empty()) g.check_vertex(s.members().back());
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<VertexSet> components;
    for (int start : s) {
        if (seen[start]) continue;
        std::vector<int> stack{start}, comp;
        seen[start] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int u : g.neighbors(v))
                if (!seen[u] && s.contains(u)) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        components.emplace_back(VertexSet(std::move(comp)));
    }
    return components;
}

Rational total_weight(const NodeWeights& w, const VertexSet& s) {
    Rational sum = 0;
    for (int v : s) sum += w.at(v);
    return sum;
}

}  // namespace cdp
