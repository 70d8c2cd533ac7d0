#pragma once

// Embeddings of graphs in planes and the verifier every construction goes through.
//
// An embedding maps vertices injectively to points; each edge uv is sent to the
// unique line through the images of u and v, and no line may serve two edges.
// The verifier recomputes every edge line; stored lines are only audited.

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "generic_plane.hpp"
#include "graph.hpp"

namespace finplane {

/// Which plane an embedding lives in. model is "PG", "AG" or "GENERIC".
struct PlaneRef {
    std::string model = "PG";
    std::int32_t q = 0;
    friend bool operator==(const PlaneRef&, const PlaneRef&) = default;
};

inline PlaneRef plane_ref(const DesarguesianPlane& p) { return {model_name(p.model()), p.order()}; }
inline PlaneRef plane_ref(const GenericPlane& p) { return {"GENERIC", p.order()}; }

struct Embedding {
    PlaneRef plane;
    GraphSpec graph;
    std::vector<PointId> vertices;   ///< image of vertex v
    std::vector<LineId> edge_lines;  ///< image of build_graph(graph).edges[i]; audit copy
    friend bool operator==(const Embedding&, const Embedding&) = default;
};

struct VerifyReport {
    bool vertices_injective = true;
    bool edges_well_defined = true;
    bool edges_injective = true;
    bool degree_bound_ok = true;
    std::vector<std::string> violations;

    bool passed() const { return vertices_injective && edges_well_defined && edges_injective && degree_bound_ok; }
};

/// Builds an embedding with freshly computed edge lines. Throws if two adjacent vertices share a point.
template <IncidencePlane P>
Embedding make_embedding(const P& plane, const GraphSpec& spec, std::vector<PointId> vertices) {
    const Graph g = build_graph(spec);
    if (static_cast<std::int32_t>(vertices.size()) != g.num_vertices)
        throw InvalidArgument("embedding of " + spec.name() + " needs " + std::to_string(g.num_vertices) + " points");
    Embedding e{plane_ref(plane), spec, std::move(vertices), {}};
    for (auto [u, v] : g.edges) e.edge_lines.push_back(plane.line_through(e.vertices[u], e.vertices[v]));
    return e;
}

template <IncidencePlane P>
VerifyReport verify_embedding(const Graph& g, const Embedding& e, const P& plane) {
    VerifyReport rep;
    if (static_cast<std::int32_t>(e.vertices.size()) != g.num_vertices)
        throw InvalidArgument("embedding maps " + std::to_string(e.vertices.size()) + " vertices, graph has " +
                              std::to_string(g.num_vertices));
    for (std::size_t v = 0; v < e.vertices.size(); ++v)
        if (!plane.has_point(e.vertices[v]))
            throw InvalidArgument("vertex " + std::to_string(v) + " is mapped to point " +
                                  std::to_string(e.vertices[v]) + " outside the plane");

    std::set<PointId> points;
    for (std::size_t v = 0; v < e.vertices.size(); ++v)
        if (!points.insert(e.vertices[v]).second) {
            rep.vertices_injective = false;
            rep.violations.push_back("vertex " + std::to_string(v) + " reuses point " + std::to_string(e.vertices[v]));
        }

    std::vector<std::optional<LineId>> lines(g.edges.size());
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto [u, v] = g.edges[i];
        const PointId a = e.vertices[u], b = e.vertices[v];
        if (a == b) {
            rep.edges_well_defined = false;
            rep.violations.push_back("edge " + std::to_string(u) + "-" + std::to_string(v) + " has coincident endpoints");
            continue;
        }
        lines[i] = plane.line_through(a, b);
        if (!e.edge_lines.empty()) {
            if (e.edge_lines.size() != g.edges.size()) {
                if (i == 0) {
                    rep.edges_well_defined = false;
                    rep.violations.push_back("stored edge list has the wrong length");
                }
            } else if (e.edge_lines[i] != *lines[i]) {
                rep.edges_well_defined = false;
                rep.violations.push_back("edge " + std::to_string(u) + "-" + std::to_string(v) + " stored line " +
                                         std::to_string(e.edge_lines[i]) + " but its points span line " +
                                         std::to_string(*lines[i]));
            }
        }
    }

    std::map<LineId, std::size_t> first_use;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        if (!lines[i]) continue;
        auto [it, fresh] = first_use.emplace(*lines[i], i);
        if (!fresh) {
            rep.edges_injective = false;
            const auto a = g.edges[it->second], b = g.edges[i];
            rep.violations.push_back("edges " + std::to_string(a.first) + "-" + std::to_string(a.second) + " and " +
                                     std::to_string(b.first) + "-" + std::to_string(b.second) + " share line " +
                                     std::to_string(*lines[i]));
        }
    }

    if (g.max_degree() > plane.order() + 1) {
        rep.degree_bound_ok = false;
        rep.violations.push_back("graph has a vertex of degree " + std::to_string(g.max_degree()) +
                                 " but points lie on only " + std::to_string(plane.order() + 1) + " lines");
    }
    return rep;
}

template <IncidencePlane P>
VerifyReport verify_embedding(const Embedding& e, const P& plane) {
    return verify_embedding(build_graph(e.graph), e, plane);
}

// JSON. Points and lines are canonical homogeneous triples of encoded field
// elements for PG/AG; plain ids for GENERIC planes.

inline nlohmann::ordered_json graph_to_json(const GraphSpec& g) {
    nlohmann::ordered_json j;
    j["kind"] = kind_name(g.kind);
    switch (g.kind) {
        case GraphKind::Cycle: j["k"] = g.n; break;
        case GraphKind::Wheel:
        case GraphKind::Gear: j["n"] = g.n; break;
        case GraphKind::EdgeList: {
            j["vertices"] = g.n;
            auto edges = nlohmann::ordered_json::array();
            for (auto [u, v] : g.explicit_edges) edges.push_back({u, v});
            j["edges"] = edges;
            break;
        }
    }
    return j;
}

inline GraphSpec graph_from_json(const nlohmann::json& j) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "CYCLE") return GraphSpec::cycle(j.at("k").get<std::int32_t>());
    if (kind == "WHEEL") return GraphSpec::wheel(j.at("n").get<std::int32_t>());
    if (kind == "GEAR") return GraphSpec::gear(j.at("n").get<std::int32_t>());
    if (kind == "EDGE_LIST") {
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
        return GraphSpec::edge_list(j.at("vertices").get<std::int32_t>(), std::move(edges));
    }
    throw SchemaError("unknown graph kind " + kind);
}

namespace detail {

inline nlohmann::ordered_json triple(const std::array<Element, 3>& c) {
    return nlohmann::ordered_json::array({c[0].value, c[1].value, c[2].value});
}

inline std::array<Element, 3> read_triple(const Field& f, const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 3) throw SchemaError("expected a homogeneous triple");
    std::array<Element, 3> c;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto v = j.at(i).get<std::int64_t>();
        if (v < 0 || v >= static_cast<std::int64_t>(f.order())) throw SchemaError("coordinate out of field range");
        c[i] = f.element(static_cast<std::uint64_t>(v));
    }
    return c;
}

}  // namespace detail

/// Serializes with coordinates (PG/AG) or raw ids (GENERIC, pass nullptr).
inline nlohmann::ordered_json embedding_to_json(const Embedding& e, const DesarguesianPlane* coords) {
    const Graph g = build_graph(e.graph);
    nlohmann::ordered_json j;
    j["plane"] = {{"model", e.plane.model}, {"q", e.plane.q}};
    j["graph"] = graph_to_json(e.graph);
    auto verts = nlohmann::ordered_json::array();
    for (std::size_t v = 0; v < e.vertices.size(); ++v) {
        if (coords)
            verts.push_back({v, detail::triple(coords->point(e.vertices[v]).c)});
        else
            verts.push_back({v, e.vertices[v]});
    }
    j["vertices"] = verts;
    auto edges = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < g.edges.size() && i < e.edge_lines.size(); ++i) {
        nlohmann::ordered_json uv = {g.edges[i].first, g.edges[i].second};
        if (coords)
            edges.push_back({uv, detail::triple(coords->line(e.edge_lines[i]).c)});
        else
            edges.push_back({uv, e.edge_lines[i]});
    }
    j["edges"] = edges;
    return j;
}

inline nlohmann::ordered_json embedding_to_json(const Embedding& e, const DesarguesianPlane& plane) {
    return embedding_to_json(e, &plane);
}

/// Parses an embedding file. When `expected` is given the file's plane must match it.
inline Embedding embedding_from_json(const nlohmann::json& j, const std::optional<PlaneRef>& expected = std::nullopt) {
    try {
        Embedding e;
        e.plane.model = j.at("plane").at("model").get<std::string>();
        e.plane.q = j.at("plane").at("q").get<std::int32_t>();
        if (expected && !(*expected == e.plane))
            throw SchemaError("embedding refers to " + e.plane.model + " of order " + std::to_string(e.plane.q) +
                              ", expected " + expected->model + " of order " + std::to_string(expected->q));
        e.graph = graph_from_json(j.at("graph"));
        const Graph g = build_graph(e.graph);

        std::optional<DesarguesianPlane> coords;
        if (e.plane.model == "PG" || e.plane.model == "AG") {
            coords.emplace(Field::of_order(static_cast<std::uint64_t>(e.plane.q)),
                           e.plane.model == "PG" ? Model::PG : Model::AG);
        } else if (e.plane.model != "GENERIC") {
            throw SchemaError("unknown plane model " + e.plane.model);
        }

        e.vertices.assign(g.num_vertices, -1);
        std::set<PointId> used;
        for (const auto& entry : j.at("vertices")) {
            const auto v = entry.at(0).get<std::int64_t>();
            if (v < 0 || v >= g.num_vertices) throw SchemaError("vertex id " + std::to_string(v) + " out of range");
            if (e.vertices[v] != -1) throw SchemaError("vertex " + std::to_string(v) + " listed twice");
            PointId p;
            if (coords) {
                const ProjPoint P{detail::canonical(coords->field(), detail::read_triple(coords->field(), entry.at(1)))};
                if (coords->model() == Model::AG && !is_affine(coords->field(), P))
                    throw SchemaError("vertex " + std::to_string(v) + " is a point at infinity in an affine plane");
                p = coords->point_id(P);
            } else {
                p = entry.at(1).get<PointId>();
            }
            if (!used.insert(p).second) throw SchemaError("duplicate point id " + std::to_string(p));
            e.vertices[v] = p;
        }
        for (std::size_t v = 0; v < e.vertices.size(); ++v)
            if (e.vertices[v] == -1) throw SchemaError("vertex " + std::to_string(v) + " is not mapped");

        if (j.contains("edges")) {
            const auto& edges = j.at("edges");
            if (edges.size() != g.edges.size()) throw SchemaError("edge list does not match the graph");
            for (std::size_t i = 0; i < edges.size(); ++i) {
                const auto& entry = edges[i];
                const Edge uv{entry.at(0).at(0).get<Vertex>(), entry.at(0).at(1).get<Vertex>()};
                if (uv != g.edges[i]) throw SchemaError("edge " + std::to_string(i) + " does not match the graph");
                if (coords) {
                    const ProjLine L{detail::canonical(coords->field(), detail::read_triple(coords->field(), entry.at(1)))};
                    const LineId id = coords->line_id(L);
                    if (!coords->has_line(id)) throw SchemaError("edge line is not in the plane");
                    e.edge_lines.push_back(id);
                } else {
                    e.edge_lines.push_back(entry.at(1).get<LineId>());
                }
            }
        }
        return e;
    } catch (const nlohmann::json::exception& ex) {
        throw SchemaError(std::string("malformed embedding file: ") + ex.what());
    } catch (const InvalidArgument& ex) {
        throw SchemaError(std::string("invalid embedding file: ") + ex.what());
    }
}

inline void save_json(const nlohmann::ordered_json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw SchemaError("cannot write " + path);
    out << j.dump() << '\n';
}

inline nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError("cannot parse " + path + ": " + e.what());
    }
}

}  // namespace finplane
