#include "cdp/steiner.hpp"

#include <algorithm>
#include <optional>
#include <queue>

#include "cdp/errors.hpp"

namespace cdp {

namespace {

struct DijkstraResult {
    std::vector<std::optional<Rational>> dist;  // path weight excluding the start
    std::vector<int> parent;
};

// Node-weighted shortest paths from `start`: entering v costs residual(v),
// the start itself costs nothing here (the caller charges the center once).
// Deterministic: the frontier is ordered by (distance, vertex id) and parents
// prefer the order of settlement.
DijkstraResult node_dijkstra(const Graph& g, const NodeWeights& residual, int start) {
    const int n = g.vertex_count();
    DijkstraResult out;
    out.dist.assign(n, std::nullopt);
    out.parent.assign(n, -1);
    out.dist[start] = Rational(0);
    out.parent[start] = start;
    std::vector<char> settled(n, 0);
    for (int round = 0; round < n; ++round) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (settled[v] || !out.dist[v]) continue;
            if (best < 0 || *out.dist[v] < *out.dist[best]) best = v;
        }
        if (best < 0) break;
        settled[best] = 1;
        for (int u : g.neighbors(best)) {
            if (settled[u]) continue;
            Rational candidate = *out.dist[best] + residual[u];
            if (!out.dist[u] || candidate < *out.dist[u]) {
                out.dist[u] = std::move(candidate);
                out.parent[u] = best;
            }
        }
    }
    return out;
}

}  // namespace

SteinerSolution spider_greedy(const SteinerInstance& inst) {
    const Graph& g = inst.graph;
    const int n = g.vertex_count();
    if (static_cast<int>(inst.weights.size()) != n)
        throw InputError("weights size does not match vertex count");
    if (!is_nonnegative(inst.weights)) throw InputError("weights must be nonnegative");
    if (inst.terminals.empty()) throw InputError("need at least one terminal");
    for (int t : inst.terminals) g.check_vertex(t);

    {
        int t0 = inst.terminals.members().front();
        for (const auto& comp : connected_components(g, VertexSet::full(n)))
            if (comp.contains(t0) && !inst.terminals.is_subset_of(comp))
                throw StructuralError("terminals lie in different components");
    }

    VertexSet nodes = inst.terminals;
    auto components = connected_components(g, nodes);
    while (components.size() > 1) {
        NodeWeights residual = inst.weights;
        for (int v : nodes) residual[v] = 0;

        // Best spider: (ratio, center id); within a center, the prefix of
        // components sorted by path cost, preferring more merges on ties.
        struct Candidate {
            Rational ratio;
            int center;
            int merged;
            std::vector<int> entries;  // one entry vertex per merged component
        };
        std::optional<Candidate> best;
        std::vector<DijkstraResult> searches(n);
        for (int c = 0; c < n; ++c) {
            searches[c] = node_dijkstra(g, residual, c);
            const auto& search = searches[c];
            std::vector<std::pair<Rational, int>> reachable;  // (cost, entry vertex)
            for (const auto& comp : components) {
                std::optional<Rational> comp_cost;
                int entry = -1;
                for (int v : comp) {
                    if (!search.dist[v]) continue;
                    if (!comp_cost || *search.dist[v] < *comp_cost) {
                        comp_cost = search.dist[v];
                        entry = v;
                    }
                }
                if (comp_cost) reachable.emplace_back(std::move(*comp_cost), entry);
            }
            if (reachable.size() < 2) continue;
            std::stable_sort(reachable.begin(), reachable.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
            Rational prefix = residual[c];
            std::vector<int> entries;
            for (size_t j = 0; j < reachable.size(); ++j) {
                prefix += reachable[j].first;
                entries.push_back(reachable[j].second);
                if (j < 1) continue;
                Rational ratio = prefix / static_cast<int>(j + 1);
                bool better = !best || ratio < best->ratio ||
                              (ratio == best->ratio && c == best->center &&
                               static_cast<int>(j + 1) > best->merged);
                if (better) best = Candidate{std::move(ratio), c,
                                             static_cast<int>(j + 1), entries};
            }
        }
        if (!best) throw InternalError("no spider found while components remain");

        nodes.insert(best->center);
        const auto& search = searches[best->center];
        for (int entry : best->entries)
            for (int v = entry; v != best->center; v = search.parent[v]) nodes.insert(v);
        components = connected_components(g, nodes);
    }

    SteinerSolution sol;
    sol.weight = total_weight(inst.weights, nodes);
    sol.nodes = std::move(nodes);
    return sol;
}

LPResult solve_nwst_lp(const SteinerInstance& inst) {
    if (inst.terminals.size() < 2) throw InputError("need at least two terminals");
    CoveringLPModel model;
    model.objective = inst.weights;
    model.row_oracle = [&inst](const FractionalSolution& x) {
        return separate_nwst_lp(inst.graph, x, inst.terminals);
    };
    return solve_covering(model);
}

SteinerSolution certified_spider_greedy(const SteinerInstance& inst) {
    SteinerSolution sol = spider_greedy(inst);
    if (inst.terminals.size() >= 2) {
        LPResult lp = solve_nwst_lp(inst);
        if (lp.status == LPStatus::Optimal && sgn(lp.value) > 0)
            sol.certified_ratio = sol.weight / lp.value;
    }
    return sol;
}

}  // namespace cdp
