#include "cdp/cds_pipeline.hpp"

#include <cmath>
#include <random>

#include "cdp/errors.hpp"
#include "cdp/steiner.hpp"

namespace cdp {

LPResult solve_cds_lp(const Graph& g, const NodeWeights& cost) {
    if (g.vertex_count() < 2) throw InputError("need at least two vertices");
    if (!g.is_connected()) throw InputError("graph must be connected");
    if (static_cast<int>(cost.size()) != g.vertex_count())
        throw InputError("cost size does not match vertex count");

    CoveringLPModel model;
    model.objective = cost;
    for (int v = 0; v < g.vertex_count(); ++v)
        model.explicit_rows.push_back(closed_neighborhood(g, v));
    model.row_oracle = [&g](const FractionalSolution& x) { return separate_cds_lp(g, x); };
    return solve_covering(model);
}

CDSRounding round_cds(const Graph& g, const NodeWeights& cost,
                      const FractionalSolution& x) {
    if (auto violated = separate_cds_lp(g, x))
        throw InputError("point is infeasible: " + violated->describe());
    return round_cds_unverified(g, cost, x);
}

CDSRounding round_cds_unverified(const Graph& g, const NodeWeights& cost,
                                 const FractionalSolution& x) {
    if (static_cast<int>(x.size()) != g.vertex_count())
        throw InputError("point size does not match vertex count");

    CDSRounding out;
    out.ds_part = primal_dual_ds(g, cost).dominating_set;
    if (connected_components(g, out.ds_part).size() == 1) {
        out.cds = out.ds_part;
    } else {
        SteinerInstance connector{g, cost, out.ds_part};
        for (int v : out.ds_part) connector.weights[v] = 0;
        out.cds = spider_greedy(connector).nodes;
    }
    out.connector_part = out.cds.set_difference(out.ds_part);
    out.cost = total_weight(cost, out.cds);

    Rational fractional_value = 0;
    for (int v = 0; v < g.vertex_count(); ++v) fractional_value += cost[v] * x[v];
    if (sgn(fractional_value) > 0) out.certified_r = out.cost / fractional_value;

    if (!is_connected_dominating(g, out.cds))
        throw InternalError("rounding produced a set that is not a connected dominating set");
    return out;
}

VertexSet randomized_ds_round(const Graph& g, const FractionalSolution& x,
                              const Rational& c, std::uint64_t seed) {
    const int n = g.vertex_count();
    if (static_cast<int>(x.size()) != n)
        throw InputError("point size does not match vertex count");

    // Feasibility of x is the caller's business: the output may fail to
    // dominate either way, and callers check and retry.
    std::mt19937_64 rng(seed);
    double scale = c.get_d() * std::log(static_cast<double>(n));
    std::vector<int> chosen;
    for (int v = 0; v < n; ++v) {
        double probability = std::min(1.0, scale * x[v].get_d());
        // 53-bit uniform draw in [0, 1); avoids distribution classes so the
        // stream is identical across standard libraries.
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u < probability) chosen.push_back(v);
    }
    return VertexSet(std::move(chosen));
}

}  // namespace cdp
