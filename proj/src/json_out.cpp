#include "cdp/json_out.hpp"

namespace cdp {

Json json_rational(const Rational& r) { return rational_str(r); }

Json json_vertex_set(const VertexSet& s) {
    Json out = Json::array();
    for (int v : s) out.push_back(v);
    return out;
}

Json json_weights(const NodeWeights& w) {
    Json out = Json::array();
    for (const Rational& r : w) out.push_back(rational_str(r));
    return out;
}

Json json_separator(const SeparatorCertificate& cert) {
    Json out;
    out["k"] = json_rational(cert.capacity);
    out["separator"] = json_vertex_set(cert.separator);
    out["side_a"] = json_vertex_set(cert.side_a);
    out["side_b"] = json_vertex_set(cert.side_b);
    return out;
}

Json json_packing(const Packing& p) {
    Json sets = Json::array();
    Json weights = Json::array();
    for (const auto& e : p.entries) {
        sets.push_back(json_vertex_set(e.set));
        weights.push_back(json_rational(e.weight));
    }
    Json out;
    out["sets"] = std::move(sets);
    out["weights"] = std::move(weights);
    return out;
}

Json json_packing_report(const PackingReport& report) {
    Json out;
    out["ok"] = report.ok;
    out["size"] = json_rational(report.size);
    if (report.worst_marginal_slack)
        out["worst_marginal_slack"] = json_rational(*report.worst_marginal_slack);
    else
        out["worst_marginal_slack"] = nullptr;
    out["violations"] = report.violations;
    return out;
}

Json json_pd_trace(const PDTrace& trace) {
    Json iterations = Json::array();
    for (const auto& it : trace.iterations) {
        Json entry;
        entry["active"] = json_vertex_set(it.active);
        entry["raise"] = json_rational(it.raise);
        entry["newly_tight"] = it.newly_tight;
        iterations.push_back(std::move(entry));
    }
    Json out;
    out["iterations"] = std::move(iterations);
    out["selection_order"] = trace.selection_order;
    out["final_selected"] = json_vertex_set(trace.final_selected);
    return out;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cdp
