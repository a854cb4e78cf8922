// Command-line front end: parses instance files, runs the packing pipeline
// and its certificate checkers, and emits exact-rational JSON.
//
// Exit codes: 0 ok, 1 parse/usage, 2 structural precondition, 3 resource
// budget, 4 failed certificate or internal invariant.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include "cdp/cds_pipeline.hpp"
#include "cdp/errors.hpp"
#include "cdp/instance.hpp"
#include "cdp/json_out.hpp"
#include "cdp/oracles.hpp"
#include "cdp/packing.hpp"

namespace {

using namespace cdp;

struct CertificateFailure : Error {
    using Error::Error;
};

void emit(const Json& payload) { std::cout << dump_json(payload); }

int run_separator(const std::string& path) {
    Instance inst = load_instance(path);
    emit(json_separator(min_capacity_separator(inst.graph, inst.capacity)));
    return 0;
}

int run_pack(const std::string& path, const std::string& rho_cap, long max_rounds,
             bool verify) {
    Instance inst = load_instance(path);
    DecomposeOptions options;
    if (!rho_cap.empty()) options.rho_cap = parse_rational(rho_cap);
    if (max_rounds > 0) options.max_rounds = max_rounds;
    CapacitatedPacking packed = pack_capacitated(inst.graph, inst.capacity, options);

    Json out = json_packing(packed.packing);
    out["k"] = json_rational(packed.k);
    out["rho"] = json_rational(packed.rho);
    out["size"] = json_rational(packed.packing.size());
    out["pricing_rounds"] = packed.pricing_rounds;
    if (verify)
        out["verification"] =
            json_packing_report(verify_packing(inst.graph, inst.capacity, packed.packing));
    emit(out);
    return 0;
}

int run_ds(const std::string& path, bool check_certificates, const std::string& c_prime,
           bool with_trace) {
    Instance inst = load_instance(path);
    PDResult run = primal_dual_ds(inst.graph, inst.cost);

    Json out;
    out["set"] = json_vertex_set(run.dominating_set);
    out["cost"] = json_rational(total_weight(inst.cost, run.dominating_set));
    out["dual"] = json_weights(run.dual);
    if (with_trace) out["trace"] = json_pd_trace(run.trace);

    if (check_certificates) {
        const Graph& g = inst.graph;
        bool dual_feasible = true, all_tight = true;
        for (int v = 0; v < g.vertex_count(); ++v) {
            Rational mass = total_weight(run.dual, closed_neighborhood(g, v));
            if (mass > inst.cost[v]) dual_feasible = false;
            if (run.dominating_set.contains(v) && mass != inst.cost[v]) all_tight = false;
        }
        Rational charge = 0;
        for (int v = 0; v < g.vertex_count(); ++v)
            charge += run.dual[v] *
                      closed_neighborhood(g, v).set_intersection(run.dominating_set).size();
        bool identity = charge == total_weight(inst.cost, run.dominating_set);
        bool witness = check_witness_lemma(g, run.trace, run.dominating_set);
        auto gamma = check_gamma_bound(g, run.trace, run.dominating_set,
                                       parse_rational(c_prime));

        Json certificates;
        certificates["dual_feasible"] = dual_feasible;
        certificates["all_tight"] = all_tight;
        certificates["rearrangement_identity"] = identity;
        certificates["witness_lemma"] = witness;
        certificates["gamma_bound"] = Json{{"holds", gamma.holds},
                                           {"worst_ratio", json_rational(gamma.worst_ratio)},
                                           {"c_prime", c_prime}};
        out["certificates"] = certificates;
        emit(out);
        if (!(dual_feasible && all_tight && identity && witness && gamma.holds))
            throw CertificateFailure("certificate check failed");
        return 0;
    }
    emit(out);
    return 0;
}

int run_cds(const std::string& path) {
    Instance inst = load_instance(path);
    LPResult lp = solve_cds_lp(inst.graph, inst.cost);
    if (lp.status != LPStatus::Optimal)
        throw InternalError("connected dominating set LP did not solve");
    CDSRounding rounded = round_cds(inst.graph, inst.cost, lp.x);

    Json out;
    out["lp_value"] = json_rational(lp.value);
    out["lp_point"] = json_weights(lp.x);
    out["generated_rows"] = lp.generated_rows;
    out["cds"] = json_vertex_set(rounded.cds);
    out["ds_part"] = json_vertex_set(rounded.ds_part);
    out["connector_part"] = json_vertex_set(rounded.connector_part);
    out["cost"] = json_rational(rounded.cost);
    out["certified_r"] =
        rounded.certified_r ? Json(rational_str(*rounded.certified_r)) : Json(nullptr);
    emit(out);
    return 0;
}

int run_exact(const std::string& path, const std::string& what) {
    Instance inst = load_instance(path);
    Json out;
    out["what"] = what;
    if (what == "ds" || what == "cds") {
        auto kind = what == "ds" ? SetKind::DominatingSet : SetKind::ConnectedDominatingSet;
        auto [set, value] = exact_min_cost_set(inst.graph, inst.cost, kind);
        out["set"] = json_vertex_set(set);
        out["value"] = json_rational(value);
    } else if (what == "packing") {
        auto [value, packing] = exact_fractional_cds_packing(inst.graph, inst.capacity);
        out["value"] = json_rational(value);
        out["packing"] = json_packing(packing);
    } else if (what == "lp-ds" || what == "lp-cds") {
        auto which = what == "lp-ds" ? DenseLP::MinDS : DenseLP::MinCDS;
        LPResult lp = dense_lp_solve(inst.graph, which, inst.cost);
        out["value"] = json_rational(lp.value);
        out["x"] = json_weights(lp.x);
    } else {
        throw InputError("unknown --what '" + what + "'");
    }
    emit(out);
    return 0;
}

int run_gap(const std::string& path) {
    Instance inst = load_instance(path);
    auto report = [&](SetKind kind, DenseLP which) {
        auto [set, integral] = exact_min_cost_set(inst.graph, inst.cost, kind);
        LPResult lp = dense_lp_solve(inst.graph, which, inst.cost);
        Json j;
        j["integral"] = json_rational(integral);
        j["lp"] = json_rational(lp.value);
        j["gap"] = sgn(lp.value) > 0 ? Json(rational_str(integral / lp.value))
                                     : Json(nullptr);
        return j;
    };
    Json out;
    out["ds"] = report(SetKind::DominatingSet, DenseLP::MinDS);
    out["cds"] = report(SetKind::ConnectedDominatingSet, DenseLP::MinCDS);
    emit(out);
    return 0;
}

int run_gen(const std::string& family, int n, int rows, int cols, std::uint64_t seed,
            int keep_percent, bool random_weights, std::uint64_t weight_seed,
            const std::string& output) {
    Instance inst;
    if (family == "path")
        inst = make_path(n);
    else if (family == "cycle")
        inst = make_cycle(n);
    else if (family == "star")
        inst = make_star(n);
    else if (family == "grid")
        inst = make_grid(rows, cols);
    else if (family == "grid-sub")
        inst = make_grid_subgraph(rows, cols, seed, keep_percent);
    else
        throw InputError("unknown family '" + family + "'");
    if (random_weights) randomize_weights(inst, weight_seed);

    std::string text = serialize_instance(inst);
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output);
        if (!out) throw InputError("cannot write '" + output + "'");
        out << text;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fractional connected-domatic packings in node-capacitated graphs"};
    app.require_subcommand(1);

    std::string file, rho_cap, c_prime = "3", what = "packing", family, output;
    long max_rounds = 0;
    int n = 5, rows = 3, cols = 3, keep_percent = 50;
    std::uint64_t seed = 1, weight_seed = 1;
    bool verify = false, check_certificates = false, with_trace = false;
    bool random_weights = false;

    auto* separator = app.add_subcommand("separator", "minimum-capacity node separator");
    separator->add_option("file", file)->required();

    auto* pack = app.add_subcommand("pack", "capacitated connected-domatic packing");
    pack->add_option("file", file)->required();
    pack->add_option("--rho-cap", rho_cap, "abort if rho exceeds this rational");
    pack->add_option("--max-rounds", max_rounds, "decomposition round budget");
    pack->add_flag("--verify", verify, "attach a verification report");

    auto* ds = app.add_subcommand("ds", "primal-dual dominating set");
    ds->add_option("file", file)->required();
    ds->add_flag("--check-certificates", check_certificates,
                 "verify duals, tightness, witness and gamma bounds");
    ds->add_option("--c-prime", c_prime, "edge-density constant of the graph family");
    ds->add_flag("--trace", with_trace, "include the per-iteration trace");

    auto* cds = app.add_subcommand("cds", "LP-driven connected dominating set");
    cds->add_option("file", file)->required();

    auto* exact = app.add_subcommand("exact", "brute-force oracles (small graphs)");
    exact->add_option("file", file)->required();
    exact->add_option("--what", what)
        ->check(CLI::IsMember({"ds", "cds", "packing", "lp-ds", "lp-cds"}));

    auto* gap = app.add_subcommand("gap", "integral vs LP optimum ratios");
    gap->add_option("file", file)->required();

    auto* gen = app.add_subcommand("gen", "emit a bundled instance family");
    gen->add_option("--family", family)
        ->required()
        ->check(CLI::IsMember({"path", "cycle", "star", "grid", "grid-sub"}));
    gen->add_option("--n", n, "size for path/cycle, leaves for star");
    gen->add_option("--rows", rows);
    gen->add_option("--cols", cols);
    gen->add_option("--seed", seed, "edge-selection seed for grid-sub");
    gen->add_option("--keep-percent", keep_percent,
                    "chance to keep each non-tree grid edge");
    gen->add_flag("--random-weights", random_weights,
                  "random integer capacities and costs in 1..9");
    gen->add_option("--weight-seed", weight_seed);
    gen->add_option("-o,--output", output, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 1;
    }

    try {
        if (separator->parsed()) return run_separator(file);
        if (pack->parsed()) return run_pack(file, rho_cap, max_rounds, verify);
        if (ds->parsed()) return run_ds(file, check_certificates, c_prime, with_trace);
        if (cds->parsed()) return run_cds(file);
        if (exact->parsed()) return run_exact(file, what);
        if (gap->parsed()) return run_gap(file);
        if (gen->parsed())
            return run_gen(family, n, rows, cols, seed, keep_percent, random_weights,
                           weight_seed, output);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const CertificateFailure& e) {
        std::cerr << "certificate failure: " << e.what() << "\n";
        return 4;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const StructuralError& e) {
        std::cerr << "structural error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
