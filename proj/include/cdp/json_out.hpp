#pragma once

#include <json.hpp>

#include "cdp/cuts.hpp"
#include "cdp/packing.hpp"
#include "cdp/primal_dual.hpp"

namespace cdp {

// All numeric fields are exact rational strings ("p" or "p/q"); outputs are
// key-ordered and therefore byte-stable.
using Json = nlohmann::ordered_json;

Json json_rational(const Rational& r);
Json json_vertex_set(const VertexSet& s);
Json json_weights(const NodeWeights& w);
Json json_separator(const SeparatorCertificate& cert);
Json json_packing(const Packing& p);
Json json_packing_report(const PackingReport& report);
Json json_pd_trace(const PDTrace& trace);

std::string dump_json(const Json& j);

}  // namespace cdp
