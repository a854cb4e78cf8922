#include "cdp/primal_dual.hpp"

#include <algorithm>
#include <optional>

#include "cdp/errors.hpp"

namespace cdp {

namespace {

// Rebuilds the prefix sets X_0, X_1, ... from a trace and validates its
// internal consistency. Returns the seed set.
VertexSet validate_trace(const PDTrace& trace) {
    size_t tight_total = 0;
    for (const auto& it : trace.iterations) {
        if (it.active.empty()) throw InputError("trace iteration with empty active set");
        if (it.newly_tight.empty())
            throw InputError("trace iteration with no newly tight vertex");
        if (sgn(it.raise) < 0) throw InputError("negative dual raise in trace");
        tight_total += it.newly_tight.size();
    }
    if (tight_total > trace.selection_order.size())
        throw InputError("selection order shorter than tight lists");
    size_t seed_count = trace.selection_order.size() - tight_total;
    std::vector<int> seeds(trace.selection_order.begin(),
                           trace.selection_order.begin() + seed_count);
    size_t pos = seed_count;
    for (const auto& it : trace.iterations)
        for (int v : it.newly_tight)
            if (trace.selection_order[pos++] != v)
                throw InputError("selection order does not match tight lists");
    VertexSet seed_set{seeds};
    if (seed_set.size() != static_cast<int>(seeds.size()))
        throw InputError("duplicate vertex in selection order");
    if (VertexSet(trace.selection_order) != trace.final_selected)
        throw InputError("selection order does not match final selected set");
    return seed_set;
}

}  // namespace

PDResult primal_dual_ds(const Graph& g, const NodeWeights& cost) {
    const int n = g.vertex_count();
    if (static_cast<int>(cost.size()) != n)
        throw InputError("cost size does not match vertex count");
    if (!is_nonnegative(cost)) throw InputError("costs must be nonnegative");
    if (!g.is_connected()) throw InputError("graph must be connected");

    PDResult result;
    result.dual.assign(n, Rational(0));
    NodeWeights closed_mass(n, Rational(0));  // sum of duals over closed nbhd

    std::vector<char> selected(n, 0);
    for (int v = 0; v < n; ++v)
        if (sgn(cost[v]) == 0) {
            selected[v] = 1;
            result.trace.selection_order.push_back(v);
        }

    while (true) {
        std::vector<int> active_ids;
        for (int v = 0; v < n; ++v) {
            bool covered = selected[v] != 0;
            for (int u : g.neighbors(v)) {
                if (covered) break;
                covered = selected[u] != 0;
            }
            if (!covered) active_ids.push_back(v);
        }
        if (active_ids.empty()) break;
        VertexSet active(active_ids);

        std::optional<Rational> raise;
        std::vector<int> hit_count(n, 0);
        for (int v = 0; v < n; ++v) {
            int count = 0;
            for (int u : closed_neighborhood(g, v))
                if (active.contains(u)) ++count;
            hit_count[v] = count;
            if (count == 0) continue;
            Rational slack = cost[v] - closed_mass[v];
            if (sgn(slack) <= 0)
                throw InternalError("tight vertex adjacent to an active vertex");
            Rational candidate = slack / count;
            if (!raise || candidate < *raise) raise = std::move(candidate);
        }
        if (!raise) throw InternalError("no raisable dual constraint");

        for (int a : active_ids) {
            result.dual[a] += *raise;
            for (int u : closed_neighborhood(g, a)) closed_mass[u] += *raise;
        }

        std::vector<int> newly_tight;
        for (int v = 0; v < n; ++v)
            if (!selected[v] && hit_count[v] > 0 && closed_mass[v] == cost[v])
                newly_tight.push_back(v);
        if (newly_tight.empty()) throw InternalError("dual raise produced no tight vertex");
        for (int v : newly_tight) {
            selected[v] = 1;
            result.trace.selection_order.push_back(v);
        }
        result.trace.iterations.push_back(
            {std::move(active), std::move(*raise), std::move(newly_tight)});
        if (static_cast<int>(result.trace.iterations.size()) > n)
            throw InternalError("primal-dual exceeded n iterations");
    }

    std::vector<int> selected_ids;
    for (int v = 0; v < n; ++v)
        if (selected[v]) selected_ids.push_back(v);
    result.trace.final_selected = VertexSet(selected_ids);
    result.dominating_set = reverse_delete(g, result.trace.final_selected,
                                           result.trace.selection_order);
    return result;
}

VertexSet reverse_delete(const Graph& g, const VertexSet& selected,
                         const std::vector<int>& selection_order) {
    if (VertexSet(selection_order) != selected ||
        selection_order.size() != static_cast<size_t>(selected.size()))
        throw InputError("selection order is not a permutation of the selected set");
    if (!is_dominating(g, selected)) throw InputError("selected set is not dominating");

    VertexSet keep = selected;
    for (auto it = selection_order.rbegin(); it != selection_order.rend(); ++it) {
        VertexSet without = keep;
        without.erase(*it);
        if (is_dominating(g, without)) keep = std::move(without);
    }
    return keep;
}

GammaBoundReport check_gamma_bound(const Graph& g, const PDTrace& trace,
                                   const VertexSet& result_set,
                                   const Rational& c_prime) {
    VertexSet before = validate_trace(trace);  // X_{i-1}, starts at the seeds
    if (!result_set.is_subset_of(trace.final_selected))
        throw InputError("result set not contained in the selected set");

    GammaBoundReport report{true, Rational(0)};
    Rational limit = 1 + 4 * c_prime;
    for (const auto& it : trace.iterations) {
        VertexSet survivors = result_set.set_difference(before);
        long charge = 0;
        for (int v : it.active)
            charge += closed_neighborhood(g, v).set_intersection(survivors).size();
        Rational ratio = Rational(charge) / it.active.size();
        if (ratio > report.worst_ratio) report.worst_ratio = ratio;
        for (int v : it.newly_tight) before.insert(v);
    }
    report.holds = report.worst_ratio <= limit;
    return report;
}

bool check_witness_lemma(const Graph& g, const PDTrace& trace,
                         const VertexSet& result_set) {
    VertexSet before = validate_trace(trace);
    for (const auto& it : trace.iterations) {
        VertexSet survivors = result_set.set_difference(before);
        if (survivors.size() > it.active.size()) return false;
        VertexSet fixed = before.set_union(result_set);
        std::vector<int> witnesses;
        for (int w : survivors) {
            int witness = -1;
            for (int v : it.active) {
                VertexSet touched = closed_neighborhood(g, v).set_intersection(fixed);
                if (touched.size() == 1 && touched.members().front() == w) {
                    witness = v;
                    break;
                }
            }
            if (witness < 0) return false;
            witnesses.push_back(witness);
        }
        std::sort(witnesses.begin(), witnesses.end());
        if (std::adjacent_find(witnesses.begin(), witnesses.end()) != witnesses.end())
            return false;  // unreachable: a witness pins down a unique survivor
        for (int v : it.newly_tight) before.insert(v);
    }
    return true;
}

}  // namespace cdp
