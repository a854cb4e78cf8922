#include "cdp/oracles.hpp"

#include <algorithm>

#include "cdp/errors.hpp"

namespace cdp {

namespace {

void check_budget(const Graph& g, const OracleBudget& budget) {
    if (budget.max_vertices > 20) throw InputError("oracle budget beyond the hard limit");
    if (g.vertex_count() > budget.max_vertices)
        throw ResourceError("graph exceeds the oracle vertex budget");
    if ((1L << g.vertex_count()) > budget.max_sets)
        throw ResourceError("enumeration exceeds the oracle set budget");
}

VertexSet set_from_mask(unsigned long mask, int n) {
    std::vector<int> ids;
    for (int v = 0; v < n; ++v)
        if (mask & (1UL << v)) ids.push_back(v);
    return VertexSet(std::move(ids));
}

}  // namespace

std::vector<VertexSet> enumerate_cds(const Graph& g, const OracleBudget& budget) {
    check_budget(g, budget);
    const int n = g.vertex_count();
    std::vector<VertexSet> out;
    for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
        VertexSet candidate = set_from_mask(mask, n);
        if (is_connected_dominating(g, candidate)) out.push_back(std::move(candidate));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::pair<VertexSet, Rational> exact_min_cost_set(const Graph& g, const NodeWeights& cost,
                                                  SetKind kind,
                                                  const OracleBudget& budget) {
    check_budget(g, budget);
    const int n = g.vertex_count();
    if (static_cast<int>(cost.size()) != n)
        throw InputError("cost size does not match vertex count");
    std::pair<VertexSet, Rational> best;
    bool found = false;
    std::vector<VertexSet> candidates;
    for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
        VertexSet candidate = set_from_mask(mask, n);
        bool valid = kind == SetKind::DominatingSet
                         ? is_dominating(g, candidate)
                         : is_connected_dominating(g, candidate);
        if (!valid) continue;
        Rational value = total_weight(cost, candidate);
        if (!found || value < best.second ||
            (value == best.second && candidate < best.first)) {
            best = {std::move(candidate), std::move(value)};
            found = true;
        }
    }
    if (!found) throw StructuralError("no feasible set exists");
    return best;
}

std::pair<Rational, Packing> exact_fractional_cds_packing(const Graph& g,
                                                          const NodeWeights& capacity,
                                                          const OracleBudget& budget) {
    std::vector<VertexSet> columns = enumerate_cds(g, budget);
    if (columns.empty()) throw StructuralError("graph has no connected dominating set");
    PackingMasterResult master = solve_packing_master(columns, capacity);
    Packing packing;
    for (size_t i = 0; i < columns.size(); ++i)
        if (sgn(master.weights[i]) > 0)
            packing.entries.push_back({columns[i], master.weights[i]});
    return {master.value, std::move(packing)};
}

std::vector<VertexSet> domination_rows(const Graph& g) {
    std::vector<VertexSet> rows;
    for (int v = 0; v < g.vertex_count(); ++v)
        rows.push_back(closed_neighborhood(g, v));
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

std::vector<VertexSet> cds_separator_rows(const Graph& g, const OracleBudget& budget) {
    check_budget(g, budget);
    const int n = g.vertex_count();
    std::vector<VertexSet> rows;
    for (unsigned long mask = 1; mask + 1 < (1UL << n); ++mask) {
        VertexSet inside = set_from_mask(mask, n);
        VertexSet border = boundary(g, inside);
        if (border.empty()) continue;
        if (inside.size() + border.size() >= n) continue;  // nothing strictly outside
        rows.push_back(std::move(border));
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

std::vector<VertexSet> nwst_rows(const Graph& g, const VertexSet& terminals,
                                 const OracleBudget& budget) {
    check_budget(g, budget);
    if (terminals.size() < 2) throw InputError("need at least two terminals");
    const int n = g.vertex_count();
    std::vector<VertexSet> rows;
    for (unsigned long mask = 1; mask + 1 < (1UL << n); ++mask) {
        VertexSet inside = set_from_mask(mask, n);
        VertexSet in_terms = inside.set_intersection(terminals);
        if (in_terms.empty() || in_terms.size() == terminals.size()) continue;
        rows.push_back(boundary(g, inside));
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

LPResult dense_lp_solve(const Graph& g, DenseLP which, const NodeWeights& cost,
                        const VertexSet& terminals, const OracleBudget& budget) {
    check_budget(g, budget);
    std::vector<VertexSet> rows;
    switch (which) {
        case DenseLP::MinDS:
            rows = domination_rows(g);
            break;
        case DenseLP::MinCDS: {
            rows = domination_rows(g);
            auto separators = cds_separator_rows(g, budget);
            rows.insert(rows.end(), separators.begin(), separators.end());
            break;
        }
        case DenseLP::NwST:
            rows = nwst_rows(g, terminals, budget);
            break;
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    CoveringLPModel model;
    model.objective = cost;
    model.explicit_rows = std::move(rows);
    LPResult result = solve_covering(model);
    result.generated_rows = static_cast<int>(model.explicit_rows.size());
    return result;
}

}  // namespace cdp
