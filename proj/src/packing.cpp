#include "cdp/packing.hpp"

#include <algorithm>

#include "cdp/errors.hpp"
#include "cdp/lp.hpp"

namespace cdp {

Rational Packing::size() const {
    Rational total = 0;
    for (const auto& e : entries) total += e.weight;
    return total;
}

Rational Packing::marginal(int v) const {
    Rational total = 0;
    for (const auto& e : entries)
        if (e.set.contains(v)) total += e.weight;
    return total;
}

DecompositionResult carr_vempala_decompose(const Graph& g, const FractionalSolution& x,
                                           const DecomposeOptions& options) {
    if (auto violated = separate_cds_lp(g, x))
        throw InputError("point is infeasible: " + violated->describe());

    const int n = g.vertex_count();
    std::vector<VertexSet> pool;
    Rational rho = 1;
    DecompositionResult result;
    long rounds = 0;
    while (true) {
        if (++rounds > options.max_rounds)
            throw ResourceError("decomposition round cap exceeded");

        NodeWeights duals(n, Rational(0));
        std::vector<Rational> weights;
        Rational master_value = 0;
        if (!pool.empty()) {
            NodeWeights bounds(n);
            for (int v = 0; v < n; ++v) bounds[v] = rho * x[v];
            PackingMasterResult master = solve_packing_master(pool, bounds);
            duals = std::move(master.duals);
            weights = std::move(master.weights);
            master_value = std::move(master.value);
        }
        if (master_value >= 1) {
            for (size_t i = 0; i < pool.size(); ++i)
                if (sgn(weights[i]) > 0)
                    result.distribution.entries.push_back(
                        {pool[i], weights[i] / master_value});
            result.rho = rho;
            result.pricing_rounds = static_cast<int>(rounds) - 1;
            break;
        }

        VertexSet priced = round_cds_unverified(g, duals, x).cds;
        if (total_weight(duals, priced) < 1) {
            if (std::find(pool.begin(), pool.end(), priced) != pool.end())
                throw InternalError("pricing repeated a pooled column");
            pool.push_back(std::move(priced));
        } else {
            rho *= 2;
            if (sgn(options.rho_cap) > 0 && rho > options.rho_cap)
                throw ResourceError("decomposition exceeded the rho cap");
        }
    }

    Rational check = 0;
    for (const auto& e : result.distribution.entries) check += e.weight;
    if (check != 1) throw InternalError("distribution weights do not sum to one");
    for (int v = 0; v < n; ++v)
        if (result.distribution.marginal(v) > result.rho * x[v])
            throw InternalError("distribution marginal exceeds rho * x");
    return result;
}

CapacitatedPacking pack_capacitated(const Graph& g, const NodeWeights& capacity,
                                    const DecomposeOptions& options) {
    const int n = g.vertex_count();
    if (n == 0) throw InputError("empty graph");
    if (static_cast<int>(capacity.size()) != n)
        throw InputError("capacity size does not match vertex count");
    for (const Rational& c : capacity)
        if (sgn(c) <= 0) throw InputError("capacities must be strictly positive");
    if (!g.is_connected()) throw StructuralError("graph must be connected");

    CapacitatedPacking out;
    out.separator = min_capacity_separator(g, capacity);
    out.k = out.separator.capacity;

    FractionalSolution x(n);
    for (int v = 0; v < n; ++v) x[v] = capacity[v] / out.k;
    if (separate_cds_lp(g, x))
        throw InternalError("capacity/k point must be feasible");

    DecompositionResult decomposition = carr_vempala_decompose(g, x, options);
    out.rho = decomposition.rho;
    out.pricing_rounds = decomposition.pricing_rounds;
    Rational scale = out.k / out.rho;
    for (const auto& e : decomposition.distribution.entries)
        out.packing.entries.push_back({e.set, scale * e.weight});

    PackingReport report = verify_packing(g, capacity, out.packing);
    if (!report.ok) throw InternalError("capacitated packing failed verification");
    return out;
}

Packing pack_complete(const Graph& g, const NodeWeights& capacity) {
    if (!g.is_complete()) throw InputError("graph is not complete");
    if (static_cast<int>(capacity.size()) != g.vertex_count())
        throw InputError("capacity size does not match vertex count");
    Packing packing;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (sgn(capacity[v]) > 0)
            packing.entries.push_back({VertexSet({v}), capacity[v]});
    return packing;
}

PackingReport verify_packing(const Graph& g, const NodeWeights& capacity,
                             const Packing& packing) {
    PackingReport report;
    report.size = packing.size();
    for (size_t i = 0; i < packing.entries.size(); ++i) {
        const auto& e = packing.entries[i];
        if (sgn(e.weight) <= 0)
            report.violations.push_back("entry " + std::to_string(i) +
                                        " has nonpositive weight");
        if (!e.set.empty() && e.set.members().back() >= g.vertex_count()) {
            report.violations.push_back("entry " + std::to_string(i) +
                                        " has out-of-range vertices");
            continue;
        }
        if (!is_connected_dominating(g, e.set))
            report.violations.push_back("entry " + std::to_string(i) +
                                        " is not a connected dominating set");
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        Rational slack = capacity.at(v) - packing.marginal(v);
        if (!report.worst_marginal_slack || slack < *report.worst_marginal_slack)
            report.worst_marginal_slack = slack;
        if (sgn(slack) < 0)
            report.violations.push_back("marginal at vertex " + std::to_string(v) +
                                        " exceeds capacity by " + rational_str(-slack));
    }
    report.ok = report.violations.empty();
    return report;
}

}  // namespace cdp
