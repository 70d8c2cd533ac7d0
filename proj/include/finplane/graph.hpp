#pragma once

// Target graphs. Vertices are 0..V-1; wheels and gears put the center at 0 and
// the rim at 1..; a gear's spokes go to rim vertices 1, 3, 5, ...

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace finplane {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

enum class GraphKind { Cycle, Wheel, Gear, EdgeList };

inline const char* kind_name(GraphKind k) {
    switch (k) {
        case GraphKind::Cycle: return "CYCLE";
        case GraphKind::Wheel: return "WHEEL";
        case GraphKind::Gear: return "GEAR";
        case GraphKind::EdgeList: return "EDGE_LIST";
    }
    return "?";
}

struct GraphSpec {
    GraphKind kind = GraphKind::Cycle;
    std::int32_t n = 0;                 ///< k for cycles, n for wheels and gears, V for edge lists
    std::vector<Edge> explicit_edges;   ///< EdgeList only

    static GraphSpec cycle(std::int32_t k) { return {GraphKind::Cycle, k, {}}; }
    static GraphSpec wheel(std::int32_t n) { return {GraphKind::Wheel, n, {}}; }
    static GraphSpec gear(std::int32_t n) { return {GraphKind::Gear, n, {}}; }
    static GraphSpec edge_list(std::int32_t vertices, std::vector<Edge> edges) {
        return {GraphKind::EdgeList, vertices, std::move(edges)};
    }

    std::int32_t num_vertices() const {
        switch (kind) {
            case GraphKind::Cycle: return n;
            case GraphKind::Wheel: return n + 1;
            case GraphKind::Gear: return 2 * n + 1;
            case GraphKind::EdgeList: return n;
        }
        return 0;
    }
    std::int32_t num_edges() const {
        switch (kind) {
            case GraphKind::Cycle: return n;
            case GraphKind::Wheel: return 2 * n;
            case GraphKind::Gear: return 3 * n;
            case GraphKind::EdgeList: return static_cast<std::int32_t>(explicit_edges.size());
        }
        return 0;
    }

    std::string name() const {
        switch (kind) {
            case GraphKind::Cycle: return "C_" + std::to_string(n);
            case GraphKind::Wheel: return "W_" + std::to_string(n);
            case GraphKind::Gear: return "G_" + std::to_string(n);
            case GraphKind::EdgeList: return "edge list on " + std::to_string(n) + " vertices";
        }
        return "?";
    }

    friend bool operator==(const GraphSpec&, const GraphSpec&) = default;
};

struct Graph {
    std::int32_t num_vertices = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<Vertex>> adjacency;

    std::int32_t degree(Vertex v) const { return static_cast<std::int32_t>(adjacency.at(v).size()); }
    std::int32_t max_degree() const {
        std::int32_t d = 0;
        for (const auto& a : adjacency) d = std::max(d, static_cast<std::int32_t>(a.size()));
        return d;
    }
};

inline Graph build_graph(const GraphSpec& spec) {
    Graph g;
    g.num_vertices = spec.num_vertices();
    auto rim = [&](Vertex first, std::int32_t len) {
        for (std::int32_t i = 0; i < len; ++i) g.edges.emplace_back(first + i, first + (i + 1) % len);
    };
    switch (spec.kind) {
        case GraphKind::Cycle:
            if (spec.n < 3) throw InvalidArgument("cycle needs k >= 3");
            rim(0, spec.n);
            break;
        case GraphKind::Wheel:
            if (spec.n < 3) throw InvalidArgument("wheel needs n >= 3");
            rim(1, spec.n);
            for (Vertex v = 1; v <= spec.n; ++v) g.edges.emplace_back(0, v);
            break;
        case GraphKind::Gear:
            if (spec.n < 3) throw InvalidArgument("gear needs n >= 3");
            rim(1, 2 * spec.n);
            for (Vertex v = 1; v <= 2 * spec.n; v += 2) g.edges.emplace_back(0, v);
            break;
        case GraphKind::EdgeList:
            if (spec.n < 1) throw InvalidArgument("edge list needs at least one vertex");
            g.edges = spec.explicit_edges;
            break;
    }
    g.adjacency.assign(g.num_vertices, {});
    std::vector<std::pair<Vertex, Vertex>> seen;
    for (auto [u, v] : g.edges) {
        if (u < 0 || v < 0 || u >= g.num_vertices || v >= g.num_vertices || u == v)
            throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) + ") is not simple");
        seen.emplace_back(std::min(u, v), std::max(u, v));
        g.adjacency[u].push_back(v);
        g.adjacency[v].push_back(u);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) throw InvalidArgument("repeated edge");
    return g;
}

}  // namespace finplane
