#pragma once

#include <doctest.h>

#include <random>
#include <utility>
#include <vector>

#include "cdp/graph.hpp"
#include "cdp/instance.hpp"

// Shared fixtures and independent brute-force oracles. Everything here works
// straight from definitions so it can stand against the library's algorithms.
namespace support {

using namespace cdp;

inline Rational Q(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Graph path_graph(int n) { return make_path(n).graph; }
inline Graph cycle_graph(int n) { return make_cycle(n).graph; }
inline Graph star_graph(int leaves) { return make_star(leaves).graph; }

inline Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

inline NodeWeights units(int n) { return NodeWeights(n, Rational(1)); }

inline NodeWeights weights_of(std::vector<long> values) {
    NodeWeights w;
    for (long v : values) w.emplace_back(v);
    return w;
}

inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

// Random spanning tree plus extra random edges; always connected and simple.
inline Graph random_connected_graph(int n, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(static_cast<int>(draw_below(rng, v)), v);
    int extras = n >= 2 ? static_cast<int>(draw_below(rng, n)) : 0;
    for (int i = 0; i < extras; ++i) {
        int u = static_cast<int>(draw_below(rng, n));
        int v = static_cast<int>(draw_below(rng, n));
        if (u == v) continue;
        auto e = std::minmax(u, v);
        std::pair<int, int> edge{e.first, e.second};
        bool dup = false;
        for (const auto& have : edges) dup = dup || have == edge;
        if (!dup) edges.push_back(edge);
    }
    return Graph(n, edges);
}

inline NodeWeights random_small_weights(int n, std::mt19937_64& rng, int low = 1,
                                        int high = 9) {
    NodeWeights w;
    for (int v = 0; v < n; ++v)
        w.emplace_back(low + static_cast<long>(draw_below(rng, high - low + 1)));
    return w;
}

inline VertexSet set_from_mask(unsigned mask, int n) {
    std::vector<int> ids;
    for (int v = 0; v < n; ++v)
        if (mask & (1U << v)) ids.push_back(v);
    return VertexSet(std::move(ids));
}

// S is a node separator iff G - S has at least two components.
inline bool separates(const Graph& g, const VertexSet& s) {
    VertexSet rest = VertexSet::full(g.vertex_count()).set_difference(s);
    return connected_components(g, rest).size() >= 2;
}

// Exhaustive minimum-capacity separator; ties toward the lexicographically
// smallest set.
inline std::pair<Rational, VertexSet> brute_force_min_separator(const Graph& g,
                                                               const NodeWeights& cap) {
    const int n = g.vertex_count();
    std::pair<Rational, VertexSet> best;
    bool found = false;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
        VertexSet s = set_from_mask(mask, n);
        if (!separates(g, s)) continue;
        Rational weight = total_weight(cap, s);
        if (!found || weight < best.first || (weight == best.first && s < best.second)) {
            best = {std::move(weight), std::move(s)};
            found = true;
        }
    }
    REQUIRE(found);
    return best;
}

// Exhaustive minimum-weight vertex cut between non-adjacent s and t.
inline Rational brute_force_min_vertex_cut(const Graph& g, const NodeWeights& w, int s,
                                           int t) {
    const int n = g.vertex_count();
    bool found = false;
    Rational best;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
        if (mask & (1U << s)) continue;
        if (mask & (1U << t)) continue;
        VertexSet cut = set_from_mask(mask, n);
        VertexSet rest = VertexSet::full(n).set_difference(cut);
        bool separated = true;
        for (const auto& comp : connected_components(g, rest))
            if (comp.contains(s) && comp.contains(t)) separated = false;
        if (!separated) continue;
        Rational weight = total_weight(w, cut);
        if (!found || weight < best) {
            best = std::move(weight);
            found = true;
        }
    }
    REQUIRE(found);
    return best;
}

// Feasibility for the connected-dominating-set LP straight from the
// definition: every closed neighborhood and every separator boundary carries
// mass at least one.
inline bool cds_lp_feasible_brute(const Graph& g, const FractionalSolution& x) {
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v)
        if (total_weight(x, closed_neighborhood(g, v)) < 1) return false;
    for (unsigned mask = 1; mask + 1 < (1U << n); ++mask) {
        VertexSet inside = set_from_mask(mask, n);
        VertexSet border = boundary(g, inside);
        if (border.empty()) continue;
        if (inside.size() + border.size() >= n) continue;
        if (total_weight(x, border) < 1) return false;
    }
    return true;
}

inline bool nwst_lp_feasible_brute(const Graph& g, const FractionalSolution& x,
                                   const VertexSet& terminals) {
    const int n = g.vertex_count();
    for (unsigned mask = 1; mask + 1 < (1U << n); ++mask) {
        VertexSet inside = set_from_mask(mask, n);
        int hit = inside.set_intersection(terminals).size();
        if (hit == 0 || hit == terminals.size()) continue;
        if (total_weight(x, boundary(g, inside)) < 1) return false;
    }
    return true;
}

// Random point scaled so the lightest constraint of the
// connected-dominating-set LP is exactly tight.
inline FractionalSolution random_feasible_cds_point(const Graph& g,
                                                    std::mt19937_64& rng) {
    const int n = g.vertex_count();
    while (true) {
        FractionalSolution x;
        for (int v = 0; v < n; ++v) x.push_back(Q(draw_below(rng, 17), 8));
        Rational lightest;
        bool first = true, zero = false;
        auto consider = [&](const VertexSet& row) {
            Rational mass = total_weight(x, row);
            if (sgn(mass) == 0) zero = true;
            if (first || mass < lightest) lightest = mass;
            first = false;
        };
        for (int v = 0; v < n; ++v) consider(closed_neighborhood(g, v));
        for (unsigned mask = 1; mask + 1 < (1U << n); ++mask) {
            VertexSet inside = set_from_mask(mask, n);
            VertexSet border = boundary(g, inside);
            if (border.empty()) continue;
            if (inside.size() + border.size() >= n) continue;
            consider(border);
        }
        if (zero || first) continue;
        for (auto& value : x) value /= lightest;
        return x;
    }
}

}  // namespace support
