#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cdp/cds_pipeline.hpp"
#include "cdp/errors.hpp"
#include "cdp/instance.hpp"
#include "cdp/oracles.hpp"
#include "cdp/packing.hpp"
#include "cdp/steiner.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// Exact rationals cross the boundary as fractions.Fraction; ints and "p/q"
// strings are accepted on the way in. Floats are rejected on purpose.
template <>
struct type_caster<mpq_class> {
    PYBIND11_TYPE_CASTER(mpq_class, const_name("fractions.Fraction"));

    bool load(handle src, bool) {
        try {
            if (isinstance<bool_>(src)) return false;
            if (isinstance<int_>(src) || isinstance<str>(src)) {
                value = cdp::parse_rational(std::string(str(src)));
                return true;
            }
            if (hasattr(src, "numerator") && hasattr(src, "denominator") &&
                !isinstance<float_>(src)) {
                std::string num(str(src.attr("numerator")));
                std::string den(str(src.attr("denominator")));
                value = cdp::parse_rational(num + "/" + den);
                return true;
            }
        } catch (const cdp::Error&) {
            return false;
        }
        return false;
    }

    static handle cast(const mpq_class& src, return_value_policy, handle) {
        object fraction = module_::import("fractions").attr("Fraction");
        return fraction(cdp::rational_str(src)).release();
    }
};

// Vertex sets are plain sorted lists of ints on the Python side.
template <>
struct type_caster<cdp::VertexSet> {
    PYBIND11_TYPE_CASTER(cdp::VertexSet, const_name("list[int]"));

    bool load(handle src, bool) {
        if (!isinstance<sequence>(src) && !isinstance<anyset>(src)) return false;
        std::vector<int> ids;
        for (handle item : src) {
            if (!isinstance<int_>(item) || isinstance<bool_>(item)) return false;
            ids.push_back(item.cast<int>());
        }
        value = cdp::VertexSet(std::move(ids));
        return true;
    }

    static handle cast(const cdp::VertexSet& src, return_value_policy, handle) {
        list out;
        for (int v : src) out.append(v);
        return out.release();
    }
};

}  // namespace pybind11::detail

namespace {

using namespace cdp;

const char* status_str(LPStatus status) {
    switch (status) {
        case LPStatus::Optimal: return "optimal";
        case LPStatus::Infeasible: return "infeasible";
        case LPStatus::Unbounded: return "unbounded";
    }
    return "unknown";
}

SetKind kind_from(const std::string& kind) {
    if (kind == "ds") return SetKind::DominatingSet;
    if (kind == "cds") return SetKind::ConnectedDominatingSet;
    throw InputError("kind must be 'ds' or 'cds'");
}

Packing packing_from(const std::vector<std::pair<VertexSet, Rational>>& entries) {
    Packing p;
    for (const auto& [set, weight] : entries) p.entries.push_back({set, weight});
    return p;
}

}  // namespace

PYBIND11_MODULE(_cdpack, m) {
    m.doc() = "fractional connected-domatic packings in node-capacitated graphs";

    py::register_exception<Error>(m, "Error");
    py::register_exception<InputError>(m, "InputError");
    py::register_exception<ParseError>(m, "InstanceParseError");
    py::register_exception<StructuralError>(m, "StructuralError");
    py::register_exception<CompleteGraphError>(m, "CompleteGraphError");
    py::register_exception<ResourceError>(m, "ResourceError");

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("n"),
             py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def("neighbors", &Graph::neighbors, py::arg("v"))
        .def("edges", &Graph::edges)
        .def("adjacent", &Graph::adjacent, py::arg("u"), py::arg("v"))
        .def("is_connected", &Graph::is_connected)
        .def("is_complete", &Graph::is_complete)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.vertex_count()) + ", m=" +
                   std::to_string(g.edge_count()) + ")";
        });

    m.def("closed_neighborhood", &closed_neighborhood, py::arg("graph"), py::arg("v"));
    m.def("boundary", &boundary, py::arg("graph"), py::arg("s"));
    m.def("is_dominating", &is_dominating, py::arg("graph"), py::arg("d"));
    m.def("is_connected_dominating", &is_connected_dominating, py::arg("graph"),
          py::arg("d"));
    m.def("connected_components", &connected_components, py::arg("graph"), py::arg("s"));

    py::class_<SeparatorCertificate>(m, "SeparatorCertificate")
        .def_readonly("separator", &SeparatorCertificate::separator)
        .def_readonly("side_a", &SeparatorCertificate::side_a)
        .def_readonly("side_b", &SeparatorCertificate::side_b)
        .def_readonly("capacity", &SeparatorCertificate::capacity);

    m.def("min_vertex_cut", &min_vertex_cut, py::arg("graph"), py::arg("weights"),
          py::arg("s"), py::arg("t"));
    m.def("min_capacity_separator", &min_capacity_separator, py::arg("graph"),
          py::arg("capacity"), py::arg("fixed_source_sweep") = false);

    py::class_<ViolatedConstraint>(m, "ViolatedConstraint")
        .def_property_readonly("kind",
                               [](const ViolatedConstraint& c) {
                                   return c.kind == ViolatedConstraint::Kind::Domination
                                              ? "domination"
                                              : "separator";
                               })
        .def_readonly("vertex", &ViolatedConstraint::vertex)
        .def_readonly("inside_set", &ViolatedConstraint::inside_set)
        .def_readonly("row", &ViolatedConstraint::row)
        .def_readonly("slack", &ViolatedConstraint::slack)
        .def("__repr__", &ViolatedConstraint::describe);

    m.def("separate_cds_lp", &separate_cds_lp, py::arg("graph"), py::arg("x"));
    m.def("separate_nwst_lp", &separate_nwst_lp, py::arg("graph"), py::arg("x"),
          py::arg("terminals"));

    py::class_<LPResult>(m, "LPResult")
        .def_readonly("x", &LPResult::x)
        .def_readonly("value", &LPResult::value)
        .def_property_readonly(
            "status", [](const LPResult& r) { return status_str(r.status); })
        .def_readonly("generated_rows", &LPResult::generated_rows);

    m.def("solve_cds_lp", &solve_cds_lp, py::arg("graph"), py::arg("cost"));
    m.def(
        "solve_nwst_lp",
        [](const Graph& g, const NodeWeights& weights, const VertexSet& terminals) {
            return solve_nwst_lp({g, weights, terminals});
        },
        py::arg("graph"), py::arg("weights"), py::arg("terminals"));

    py::class_<PDIteration>(m, "PDIteration")
        .def_readonly("active", &PDIteration::active)
        .def_readonly("raise_amount", &PDIteration::raise)
        .def_readonly("newly_tight", &PDIteration::newly_tight);

    py::class_<PDTrace>(m, "PDTrace")
        .def_readonly("iterations", &PDTrace::iterations)
        .def_readonly("selection_order", &PDTrace::selection_order)
        .def_readonly("final_selected", &PDTrace::final_selected);

    py::class_<PDResult>(m, "PDResult")
        .def_readonly("dominating_set", &PDResult::dominating_set)
        .def_readonly("dual", &PDResult::dual)
        .def_readonly("trace", &PDResult::trace);

    m.def("primal_dual_ds", &primal_dual_ds, py::arg("graph"), py::arg("cost"));
    m.def("reverse_delete", &reverse_delete, py::arg("graph"), py::arg("selected"),
          py::arg("selection_order"));
    m.def(
        "check_gamma_bound",
        [](const Graph& g, const PDTrace& trace, const VertexSet& result,
           const Rational& c_prime) {
            auto report = check_gamma_bound(g, trace, result, c_prime);
            return py::make_tuple(report.holds, report.worst_ratio);
        },
        py::arg("graph"), py::arg("trace"), py::arg("result_set"), py::arg("c_prime"));
    m.def("check_witness_lemma", &check_witness_lemma, py::arg("graph"),
          py::arg("trace"), py::arg("result_set"));

    py::class_<SteinerSolution>(m, "SteinerSolution")
        .def_readonly("nodes", &SteinerSolution::nodes)
        .def_readonly("weight", &SteinerSolution::weight)
        .def_readonly("certified_ratio", &SteinerSolution::certified_ratio);

    m.def(
        "spider_greedy",
        [](const Graph& g, const NodeWeights& weights, const VertexSet& terminals) {
            return spider_greedy({g, weights, terminals});
        },
        py::arg("graph"), py::arg("weights"), py::arg("terminals"));
    m.def(
        "certified_spider_greedy",
        [](const Graph& g, const NodeWeights& weights, const VertexSet& terminals) {
            return certified_spider_greedy({g, weights, terminals});
        },
        py::arg("graph"), py::arg("weights"), py::arg("terminals"));

    py::class_<CDSRounding>(m, "CDSRounding")
        .def_readonly("cds", &CDSRounding::cds)
        .def_readonly("ds_part", &CDSRounding::ds_part)
        .def_readonly("connector_part", &CDSRounding::connector_part)
        .def_readonly("cost", &CDSRounding::cost)
        .def_readonly("certified_r", &CDSRounding::certified_r);

    m.def("round_cds", &round_cds, py::arg("graph"), py::arg("cost"), py::arg("x"));
    m.def("randomized_ds_round", &randomized_ds_round, py::arg("graph"), py::arg("x"),
          py::arg("c"), py::arg("seed"));

    py::class_<Packing>(m, "Packing")
        .def(py::init(&packing_from), py::arg("entries"))
        .def_property_readonly("entries",
                               [](const Packing& p) {
                                   std::vector<std::pair<VertexSet, Rational>> out;
                                   for (const auto& e : p.entries)
                                       out.emplace_back(e.set, e.weight);
                                   return out;
                               })
        .def("size", &Packing::size)
        .def("marginal", &Packing::marginal, py::arg("v"));

    py::class_<DecompositionResult>(m, "DecompositionResult")
        .def_readonly("distribution", &DecompositionResult::distribution)
        .def_readonly("rho", &DecompositionResult::rho)
        .def_readonly("pricing_rounds", &DecompositionResult::pricing_rounds);

    m.def(
        "carr_vempala_decompose",
        [](const Graph& g, const FractionalSolution& x, long max_rounds,
           const Rational& rho_cap) {
            DecomposeOptions options;
            options.max_rounds = max_rounds;
            options.rho_cap = rho_cap;
            return carr_vempala_decompose(g, x, options);
        },
        py::arg("graph"), py::arg("x"), py::arg("max_rounds") = 100000,
        py::arg("rho_cap") = Rational(0));

    py::class_<CapacitatedPacking>(m, "CapacitatedPacking")
        .def_readonly("packing", &CapacitatedPacking::packing)
        .def_readonly("k", &CapacitatedPacking::k)
        .def_readonly("rho", &CapacitatedPacking::rho)
        .def_readonly("separator", &CapacitatedPacking::separator)
        .def_readonly("pricing_rounds", &CapacitatedPacking::pricing_rounds);

    m.def(
        "pack_capacitated",
        [](const Graph& g, const NodeWeights& capacity, long max_rounds,
           const Rational& rho_cap) {
            DecomposeOptions options;
            options.max_rounds = max_rounds;
            options.rho_cap = rho_cap;
            return pack_capacitated(g, capacity, options);
        },
        py::arg("graph"), py::arg("capacity"), py::arg("max_rounds") = 100000,
        py::arg("rho_cap") = Rational(0));
    m.def("pack_complete", &pack_complete, py::arg("graph"), py::arg("capacity"));

    py::class_<PackingReport>(m, "PackingReport")
        .def_readonly("ok", &PackingReport::ok)
        .def_readonly("size", &PackingReport::size)
        .def_readonly("worst_marginal_slack", &PackingReport::worst_marginal_slack)
        .def_readonly("violations", &PackingReport::violations);

    m.def("verify_packing", &verify_packing, py::arg("graph"), py::arg("capacity"),
          py::arg("packing"));

    m.def(
        "enumerate_cds",
        [](const Graph& g, int max_vertices) {
            OracleBudget budget;
            budget.max_vertices = max_vertices;
            return enumerate_cds(g, budget);
        },
        py::arg("graph"), py::arg("max_vertices") = 7);
    m.def(
        "exact_min_cost_set",
        [](const Graph& g, const NodeWeights& cost, const std::string& kind,
           int max_vertices) {
            OracleBudget budget;
            budget.max_vertices = max_vertices;
            return exact_min_cost_set(g, cost, kind_from(kind), budget);
        },
        py::arg("graph"), py::arg("cost"), py::arg("kind"), py::arg("max_vertices") = 7);
    m.def(
        "exact_fractional_cds_packing",
        [](const Graph& g, const NodeWeights& capacity, int max_vertices) {
            OracleBudget budget;
            budget.max_vertices = max_vertices;
            return exact_fractional_cds_packing(g, capacity, budget);
        },
        py::arg("graph"), py::arg("capacity"), py::arg("max_vertices") = 7);
    m.def(
        "dense_lp_solve",
        [](const Graph& g, const std::string& which, const NodeWeights& cost,
           const VertexSet& terminals, int max_vertices) {
            OracleBudget budget;
            budget.max_vertices = max_vertices;
            DenseLP lp;
            if (which == "ds")
                lp = DenseLP::MinDS;
            else if (which == "cds")
                lp = DenseLP::MinCDS;
            else if (which == "nwst")
                lp = DenseLP::NwST;
            else
                throw InputError("which must be 'ds', 'cds' or 'nwst'");
            return dense_lp_solve(g, lp, cost, terminals, budget);
        },
        py::arg("graph"), py::arg("which"), py::arg("cost"),
        py::arg("terminals") = VertexSet{}, py::arg("max_vertices") = 7);

    py::class_<Instance>(m, "Instance")
        .def_readonly("graph", &Instance::graph)
        .def_readonly("capacity", &Instance::capacity)
        .def_readonly("cost", &Instance::cost);

    m.def("parse_instance",
          [](const std::string& text) { return parse_instance(text); },
          py::arg("text"));
    m.def("serialize_instance", &serialize_instance, py::arg("instance"));
    m.def("make_path", &make_path, py::arg("n"));
    m.def("make_cycle", &make_cycle, py::arg("n"));
    m.def("make_star", &make_star, py::arg("leaves"));
    m.def("make_grid", &make_grid, py::arg("rows"), py::arg("cols"));
    m.def("make_grid_subgraph", &make_grid_subgraph, py::arg("rows"), py::arg("cols"),
          py::arg("seed"), py::arg("keep_percent"));
}
