#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "cdp/graph.hpp"

namespace cdp {

// On-disk problem instance. Text format, one record per line:
//   # comment
//   nodes <n>
//   node <id> <capacity> <cost>     (ids dense 0..n-1)
//   edge <u> <v>                    (u < v, listed once, simple graph)
// Capacities and costs are nonnegative rationals, "p" or "p/q".
struct Instance {
    Graph graph;
    NodeWeights capacity;
    NodeWeights cost;
};

// Throws ParseError with a 1-based line number on malformed input.
Instance parse_instance(std::string_view text);

// Canonical text: header, node lines ascending, edge lines sorted, no
// comments. parse(serialize(i)) round-trips byte-identically.
std::string serialize_instance(const Instance& inst);

Instance load_instance(const std::string& path);

// Bundled instance families (unit capacities and costs).
Instance make_path(int n);
Instance make_cycle(int n);
// A hub plus `leaves` spokes; vertex 0 is the hub.
Instance make_star(int leaves);
Instance make_grid(int rows, int cols);
// Connected random subgraph of the rows x cols grid: a random spanning tree
// plus each remaining grid edge with probability keep_percent/100.
Instance make_grid_subgraph(int rows, int cols, std::uint64_t seed, int keep_percent);

// Replaces capacities and costs with integers drawn uniformly from
// [low, high], deterministically from the seed.
void randomize_weights(Instance& inst, std::uint64_t seed, int low = 1, int high = 9);

}  // namespace cdp
