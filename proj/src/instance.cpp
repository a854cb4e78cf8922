#include "cdp/instance.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "cdp/errors.hpp"

namespace cdp {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::istringstream in(line);
    std::string field;
    while (in >> field) fields.push_back(field);
    return fields;
}

int parse_int(const std::string& text, int line) {
    try {
        size_t used = 0;
        int value = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + text + "'");
    }
}

Rational parse_weight(const std::string& text, int line) {
    try {
        Rational r = parse_rational(text);
        if (sgn(r) < 0) throw InputError("negative");
        return r;
    } catch (const InputError&) {
        throw ParseError(line, "expected a nonnegative rational, got '" + text + "'");
    }
}

// Deterministic integer in [0, bound) from a 64-bit generator; avoids
// distribution classes so streams match across standard libraries.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

Instance unit_instance(int n, std::vector<std::pair<int, int>> edges) {
    Instance inst;
    inst.graph = Graph(n, edges);
    inst.capacity.assign(n, Rational(1));
    inst.cost.assign(n, Rational(1));
    return inst;
}

}  // namespace

Instance parse_instance(std::string_view text) {
    std::istringstream stream{std::string(text)};
    std::string line;
    int line_no = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<char> node_seen;
    NodeWeights capacity, cost;

    while (std::getline(stream, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string trimmed = line;
        trimmed.erase(0, trimmed.find_first_not_of(" \t"));
        if (trimmed.empty() || trimmed[0] == '#') continue;
        auto fields = split_fields(trimmed);

        if (fields[0] == "nodes") {
            if (n >= 0) throw ParseError(line_no, "duplicate nodes header");
            if (fields.size() != 2) throw ParseError(line_no, "usage: nodes <n>");
            n = parse_int(fields[1], line_no);
            if (n < 0) throw ParseError(line_no, "negative node count");
            node_seen.assign(n, 0);
            capacity.assign(n, Rational(0));
            cost.assign(n, Rational(0));
        } else if (fields[0] == "node") {
            if (n < 0) throw ParseError(line_no, "node line before nodes header");
            if (fields.size() != 4)
                throw ParseError(line_no, "usage: node <id> <capacity> <cost>");
            int id = parse_int(fields[1], line_no);
            if (id < 0 || id >= n) throw ParseError(line_no, "node id out of range");
            if (node_seen[id]) throw ParseError(line_no, "duplicate node id");
            node_seen[id] = 1;
            capacity[id] = parse_weight(fields[2], line_no);
            cost[id] = parse_weight(fields[3], line_no);
        } else if (fields[0] == "edge") {
            if (n < 0) throw ParseError(line_no, "edge line before nodes header");
            if (fields.size() != 3) throw ParseError(line_no, "usage: edge <u> <v>");
            int u = parse_int(fields[1], line_no);
            int v = parse_int(fields[2], line_no);
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw ParseError(line_no, "edge endpoint out of range");
            if (u >= v) throw ParseError(line_no, "edges must satisfy u < v");
            if (std::find(edges.begin(), edges.end(), std::make_pair(u, v)) != edges.end())
                throw ParseError(line_no, "duplicate edge");
            edges.emplace_back(u, v);
        } else {
            throw ParseError(line_no, "unknown record '" + fields[0] + "'");
        }
    }
    if (n < 0) throw ParseError(line_no, "missing nodes header");
    for (int v = 0; v < n; ++v)
        if (!node_seen[v])
            throw ParseError(line_no, "missing node line for id " + std::to_string(v));

    Instance inst;
    inst.graph = Graph(n, edges);
    inst.capacity = std::move(capacity);
    inst.cost = std::move(cost);
    return inst;
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream out;
    int n = inst.graph.vertex_count();
    out << "nodes " << n << "\n";
    for (int v = 0; v < n; ++v)
        out << "node " << v << " " << rational_str(inst.capacity[v]) << " "
            << rational_str(inst.cost[v]) << "\n";
    for (const auto& [u, v] : inst.graph.edges()) out << "edge " << u << " " << v << "\n";
    return out.str();
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_instance(buffer.str());
}

Instance make_path(int n) {
    if (n < 1) throw InputError("path needs at least one vertex");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return unit_instance(n, std::move(edges));
}

Instance make_cycle(int n) {
    if (n < 3) throw InputError("cycle needs at least three vertices");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(0, n - 1);
    return unit_instance(n, std::move(edges));
}

Instance make_star(int leaves) {
    if (leaves < 1) throw InputError("star needs at least one leaf");
    std::vector<std::pair<int, int>> edges;
    for (int leaf = 1; leaf <= leaves; ++leaf) edges.emplace_back(0, leaf);
    return unit_instance(leaves + 1, std::move(edges));
}

Instance make_grid(int rows, int cols) {
    if (rows < 1 || cols < 1) throw InputError("grid needs positive dimensions");
    auto id = [cols](int r, int c) { return r * cols + c; };
    std::vector<std::pair<int, int>> edges;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    return unit_instance(rows * cols, std::move(edges));
}

Instance make_grid_subgraph(int rows, int cols, std::uint64_t seed, int keep_percent) {
    if (keep_percent < 0 || keep_percent > 100)
        throw InputError("keep percentage must be in [0, 100]");
    Instance grid = make_grid(rows, cols);
    auto all_edges = grid.graph.edges();
    std::mt19937_64 rng(seed);

    // Random spanning tree by randomized Kruskal, then a coin per leftover
    // edge. Stays planar and connected.
    std::vector<size_t> order(all_edges.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[draw_below(rng, i)]);

    int n = grid.graph.vertex_count();
    std::vector<int> root(n);
    for (int v = 0; v < n; ++v) root[v] = v;
    auto find = [&root](int v) {
        while (root[v] != v) v = root[v] = root[root[v]];
        return v;
    };
    std::vector<char> in_tree(all_edges.size(), 0);
    for (size_t i : order) {
        int a = find(all_edges[i].first), b = find(all_edges[i].second);
        if (a != b) {
            root[a] = b;
            in_tree[i] = 1;
        }
    }
    std::vector<std::pair<int, int>> kept;
    for (size_t i = 0; i < all_edges.size(); ++i)
        if (in_tree[i] || draw_below(rng, 100) < static_cast<std::uint64_t>(keep_percent))
            kept.push_back(all_edges[i]);
    return unit_instance(n, std::move(kept));
}

void randomize_weights(Instance& inst, std::uint64_t seed, int low, int high) {
    if (low < 0 || high < low) throw InputError("bad weight range");
    std::mt19937_64 rng(seed);
    std::uint64_t span = static_cast<std::uint64_t>(high - low) + 1;
    for (auto& c : inst.capacity) c = Rational(low + static_cast<int>(draw_below(rng, span)));
    for (auto& c : inst.cost) c = Rational(low + static_cast<int>(draw_below(rng, span)));
}

}  // namespace cdp
