#include "cdp/cuts.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "cdp/errors.hpp"

namespace cdp {

namespace {

// Max-flow over the node-split digraph: vertex v becomes v_in = 2v and
// v_out = 2v+1 joined by an arc of capacity weights(v); every undirected
// edge {u, v} becomes u_out->v_in and v_out->u_in with capacity larger than
// the total node weight (a stand-in for infinity that keeps all arithmetic
// rational).
class SplitNetwork {
public:
    SplitNetwork(const Graph& g, const NodeWeights& weights) {
        int n = g.vertex_count();
        adjacency_.resize(2 * n);
        Rational infinite = 1;
        for (const Rational& w : weights) infinite += w;
        for (int v = 0; v < n; ++v) add_arc(in(v), out(v), weights[v]);
        for (const auto& [u, v] : g.edges()) {
            add_arc(out(u), in(v), infinite);
            add_arc(out(v), in(u), infinite);
        }
    }

    static int in(int v) { return 2 * v; }
    static int out(int v) { return 2 * v + 1; }

    // Edmonds-Karp; exact bottleneck augmentation. Terminates regardless of
    // capacity values (the shortest-path bound does not depend on them).
    Rational max_flow(int source, int sink) {
        Rational flow = 0;
        while (true) {
            auto parent = bfs_path(source, sink);
            if (parent[sink].first < 0) break;
            Rational bottleneck = -1;
            for (int node = sink; node != source;) {
                auto [prev, arc_idx] = parent[node];
                const Arc& a = adjacency_[prev][arc_idx];
                Rational residual = a.capacity - a.flow;
                if (bottleneck < 0 || residual < bottleneck) bottleneck = residual;
                node = prev;
            }
            for (int node = sink; node != source;) {
                auto [prev, arc_idx] = parent[node];
                Arc& a = adjacency_[prev][arc_idx];
                a.flow += bottleneck;
                adjacency_[a.to][a.reverse_index].flow -= bottleneck;
                node = prev;
            }
            flow += bottleneck;
        }
        return flow;
    }

    // Nodes reachable from source through strictly positive residuals.
    std::vector<char> residual_reachable(int source) const {
        std::vector<char> seen(adjacency_.size(), 0);
        std::deque<int> queue{source};
        seen[source] = 1;
        while (!queue.empty()) {
            int node = queue.front();
            queue.pop_front();
            for (const Arc& a : adjacency_[node])
                if (!seen[a.to] && a.flow < a.capacity) {
                    seen[a.to] = 1;
                    queue.push_back(a.to);
                }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        int reverse_index;
        Rational capacity;
        Rational flow;
    };

    void add_arc(int from, int to, Rational capacity) {
        adjacency_[from].push_back({to, static_cast<int>(adjacency_[to].size()),
                                    std::move(capacity), 0});
        adjacency_[to].push_back({from, static_cast<int>(adjacency_[from].size()) - 1,
                                  Rational(0), 0});
    }

    std::vector<std::pair<int, int>> bfs_path(int source, int sink) const {
        std::vector<std::pair<int, int>> parent(adjacency_.size(), {-1, -1});
        parent[source] = {source, -1};
        std::deque<int> queue{source};
        while (!queue.empty()) {
            int node = queue.front();
            queue.pop_front();
            if (node == sink) break;
            for (int i = 0; i < static_cast<int>(adjacency_[node].size()); ++i) {
                const Arc& a = adjacency_[node][i];
                if (parent[a.to].first < 0 && a.flow < a.capacity) {
                    parent[a.to] = {node, i};
                    queue.push_back(a.to);
                }
            }
        }
        parent[source] = {-1, -1};
        if (source == sink) parent[source] = {source, -1};
        return parent;
    }

    std::vector<std::vector<Arc>> adjacency_;
};

struct BoundaryCut {
    Rational value;
    VertexSet inside;  // contains s; its boundary is the cut
    VertexSet cut;     // boundary(inside), weight exactly `value`
};

// sink_open=false: cut excludes t and its closed surroundings (t ends up
// strictly outside inside + boundary); sink is t_in. Used for node cuts and
// the separator family of the connected-dominating-set LP.
// sink_open=true: t may itself lie on the boundary; sink is t_out. Used
// for the terminal-separating family of the Steiner LP.
BoundaryCut min_boundary_cut(const Graph& g, const NodeWeights& weights, int s, int t,
                             bool sink_open) {
    SplitNetwork net(g, weights);
    int source = SplitNetwork::out(s);
    int sink = sink_open ? SplitNetwork::out(t) : SplitNetwork::in(t);
    Rational value = net.max_flow(source, sink);
    auto reach = net.residual_reachable(source);
    std::vector<int> inside_ids;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (reach[SplitNetwork::out(v)]) inside_ids.push_back(v);
    VertexSet inside(std::move(inside_ids));
    VertexSet cut = boundary(g, inside);
    if (total_weight(weights, cut) != value)
        throw InternalError("max-flow value does not match cut weight");
    return {std::move(value), std::move(inside), std::move(cut)};
}

void check_weights(const Graph& g, const NodeWeights& w, const char* what) {
    if (static_cast<int>(w.size()) != g.vertex_count())
        throw InputError(std::string(what) + " size does not match vertex count");
    if (!is_nonnegative(w)) throw InputError(std::string(what) + " must be nonnegative");
}

SeparatorCertificate certificate_from_cut(const Graph& g, int s, BoundaryCut cut) {
    VertexSet rest = VertexSet::full(g.vertex_count()).set_difference(cut.cut);
    VertexSet side_a;
    for (const VertexSet& comp : connected_components(g, rest))
        if (comp.contains(s)) {
            side_a = comp;
            break;
        }
    VertexSet side_b = rest.set_difference(side_a);
    return {std::move(cut.cut), std::move(side_a), std::move(side_b),
            std::move(cut.value)};
}

}  // namespace

std::string ViolatedConstraint::describe() const {
    std::string text;
    if (kind == Kind::Domination)
        text = "domination constraint at vertex " + std::to_string(vertex);
    else {
        text = "separator constraint for S = {";
        bool first = true;
        for (int v : inside_set) {
            if (!first) text += ",";
            text += std::to_string(v);
            first = false;
        }
        text += "}";
    }
    text += " short by " + rational_str(-slack);
    return text;
}

SeparatorCertificate min_vertex_cut(const Graph& g, const NodeWeights& weights, int s,
                                    int t) {
    g.check_vertex(s);
    g.check_vertex(t);
    check_weights(g, weights, "weights");
    if (s == t) throw InputError("cut endpoints must be distinct");
    if (g.adjacent(s, t))
        throw StructuralError("no vertex cut exists: endpoints are adjacent");
    return certificate_from_cut(g, s, min_boundary_cut(g, weights, s, t, false));
}

SeparatorCertificate min_capacity_separator(const Graph& g, const NodeWeights& capacity,
                                            bool fixed_source_sweep) {
    check_weights(g, capacity, "capacity");
    if (g.is_complete())
        throw CompleteGraphError("complete graph has no node separator");

    std::vector<std::pair<int, int>> pairs;
    bool uniform = std::all_of(capacity.begin(), capacity.end(),
                               [&](const Rational& c) { return c == capacity[0]; });
    if (fixed_source_sweep && uniform) {
        // Fix a source, sweep its non-neighbors, then its neighbors'
        // non-neighbors. Valid only for uniform capacities.
        int s0 = 0;
        auto add_pairs_from = [&](int u) {
            VertexSet closed = closed_neighborhood(g, u);
            for (int t = 0; t < g.vertex_count(); ++t)
                if (!closed.contains(t))
                    pairs.emplace_back(std::min(u, t), std::max(u, t));
        };
        add_pairs_from(s0);
        for (int u : g.neighbors(s0)) add_pairs_from(u);
        std::sort(pairs.begin(), pairs.end());
        pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    } else {
        for (int s = 0; s < g.vertex_count(); ++s)
            for (int t = s + 1; t < g.vertex_count(); ++t)
                if (!g.adjacent(s, t)) pairs.emplace_back(s, t);
    }

    std::optional<SeparatorCertificate> best;
    for (const auto& [s, t] : pairs) {
        SeparatorCertificate cert = min_vertex_cut(g, capacity, s, t);
        if (!best || cert.capacity < best->capacity ||
            (cert.capacity == best->capacity && cert.separator < best->separator))
            best = std::move(cert);
    }
    return *best;
}

std::optional<ViolatedConstraint> separate_cds_lp(const Graph& g,
                                                  const FractionalSolution& x) {
    check_weights(g, x, "x");
    // The pair sweep below enumerates the separator family completely only
    // on connected graphs, which is the problem's habitat anyway.
    if (!g.is_connected()) throw InputError("graph must be connected");

    // Domination family first, most violated (smallest mass, then smallest id).
    std::optional<ViolatedConstraint> worst;
    for (int v = 0; v < g.vertex_count(); ++v) {
        VertexSet row = closed_neighborhood(g, v);
        Rational mass = total_weight(x, row);
        if (mass < 1 && (!worst || mass - 1 < worst->slack)) {
            worst = ViolatedConstraint{ViolatedConstraint::Kind::Domination, v,
                                       VertexSet{}, std::move(row), mass - 1};
        }
    }
    if (worst) return worst;

    // Separator family: the most x-light boundary over non-adjacent pairs.
    std::optional<std::pair<Rational, VertexSet>> best;  // (mass, inside set)
    for (int s = 0; s < g.vertex_count(); ++s)
        for (int t = s + 1; t < g.vertex_count(); ++t) {
            if (g.adjacent(s, t)) continue;
            BoundaryCut cut = min_boundary_cut(g, x, s, t, false);
            // Normalize to the component of s; its boundary can only shrink.
            VertexSet rest = VertexSet::full(g.vertex_count()).set_difference(cut.cut);
            VertexSet inside;
            for (const VertexSet& comp : connected_components(g, rest))
                if (comp.contains(s)) {
                    inside = comp;
                    break;
                }
            Rational mass = total_weight(x, boundary(g, inside));
            if (!best || mass < best->first ||
                (mass == best->first && inside < best->second))
                best = {std::move(mass), std::move(inside)};
        }
    if (best && best->first < 1) {
        VertexSet row = boundary(g, best->second);
        return ViolatedConstraint{ViolatedConstraint::Kind::Separator, -1,
                                  std::move(best->second), std::move(row),
                                  best->first - 1};
    }
    return std::nullopt;
}

std::optional<ViolatedConstraint> separate_nwst_lp(const Graph& g,
                                                   const FractionalSolution& x,
                                                   const VertexSet& terminals) {
    check_weights(g, x, "x");
    if (terminals.size() < 2) throw InputError("need at least two terminals");
    for (int t : terminals) g.check_vertex(t);

    // Any terminal-separating set has the first terminal on one side or the
    // other, so cuts against a fixed terminal in both directions cover the
    // whole family.
    int t0 = terminals.members().front();
    std::optional<std::pair<Rational, VertexSet>> best;
    auto consider = [&](int source, int sink) {
        BoundaryCut cut = min_boundary_cut(g, x, source, sink, true);
        Rational mass = total_weight(x, cut.cut);
        if (!best || mass < best->first ||
            (mass == best->first && cut.inside < best->second))
            best = {std::move(mass), std::move(cut.inside)};
    };
    for (int t : terminals) {
        if (t == t0) continue;
        consider(t0, t);
        consider(t, t0);
    }
    if (best && best->first < 1) {
        VertexSet row = boundary(g, best->second);
        return ViolatedConstraint{ViolatedConstraint::Kind::Separator, -1,
                                  std::move(best->second), std::move(row),
                                  best->first - 1};
    }
    return std::nullopt;
}

}  // namespace cdp
