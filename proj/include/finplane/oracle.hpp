#pragma once

// Exhaustive backtracking embedder for small planes.
//
// Vertices are placed one at a time (decreasing degree, then breadth-first);
// a placement is rejected as soon as an edge to an already placed neighbour
// would reuse a line, or a placed vertex is left with fewer free lines than it
// has unplaced neighbours. Known plane symmetries pin the first one or two
// vertices. NotFound is only reported after the whole tree was exhausted.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <vector>

#include "embedding.hpp"

namespace finplane {

enum class SearchStatus { Found, NotFound, BudgetExceeded };

inline const char* status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "found";
        case SearchStatus::NotFound: return "notfound";
        case SearchStatus::BudgetExceeded: return "budget";
    }
    return "?";
}

struct SearchResult {
    SearchStatus status = SearchStatus::NotFound;
    std::optional<Embedding> embedding;
    std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

namespace detail {

class Backtracker {
   public:
    Backtracker(const Graph& g, const GenericPlane& plane, std::uint64_t budget)
        : g_(g), plane_(plane), budget_(budget) {
        order_ = vertex_order(g);
        pos_of_.assign(g.num_vertices, 0);
        for (std::size_t i = 0; i < order_.size(); ++i) pos_of_[order_[i]] = static_cast<std::int32_t>(i);
        assign_.assign(g.num_vertices, -1);
        point_used_.assign(plane.num_points(), 0);
        line_used_.assign(plane.num_lines(), 0);
        free_lines_.assign(plane.num_points(), 0);
        for (PointId p = 0; p < plane.num_points(); ++p)
            free_lines_[p] = static_cast<std::int32_t>(plane.lines_through(p).size());
        pending_.assign(g.num_vertices, 0);
        for (Vertex v = 0; v < g.num_vertices; ++v) pending_[v] = g.degree(v);
    }

    SearchStatus run() {
        const bool ok = place(0);
        if (aborted_) return SearchStatus::BudgetExceeded;
        return ok ? SearchStatus::Found : SearchStatus::NotFound;
    }

    std::uint64_t nodes() const { return nodes_; }
    const std::vector<PointId>& assignment() const { return assign_; }

   private:
    static std::vector<Vertex> vertex_order(const Graph& g) {
        std::vector<Vertex> out;
        std::vector<char> seen(g.num_vertices, 0);
        auto better = [&](Vertex a, Vertex b) {
            return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
        };
        while (static_cast<std::int32_t>(out.size()) < g.num_vertices) {
            Vertex root = -1;
            for (Vertex v = 0; v < g.num_vertices; ++v)
                if (!seen[v] && (root < 0 || better(v, root))) root = v;
            std::queue<Vertex> bfs;
            bfs.push(root);
            seen[root] = 1;
            while (!bfs.empty()) {
                const Vertex v = bfs.front();
                bfs.pop();
                out.push_back(v);
                auto nbrs = g.adjacency[v];
                std::sort(nbrs.begin(), nbrs.end(), better);
                for (Vertex u : nbrs)
                    if (!seen[u]) {
                        seen[u] = 1;
                        bfs.push(u);
                    }
            }
        }
        return out;
    }

    void use_line(LineId l, int delta) {
        line_used_[l] += delta;
        for (PointId p : plane_.lines()[l]) free_lines_[p] -= delta;
    }

    bool place(std::size_t pos) {
        if (pos == order_.size()) return true;
        const Vertex v = order_[pos];

        std::vector<PointId> candidates;
        const auto sym = plane_.symmetry();
        if (pos == 0 && sym != PlaneSymmetry::None) {
            candidates.push_back(0);
        } else if (pos == 1 && sym == PlaneSymmetry::TwoTransitive) {
            candidates.push_back(assign_[order_[0]] == 0 ? 1 : 0);
        } else {
            for (PointId p = 0; p < plane_.num_points(); ++p) candidates.push_back(p);
        }

        std::vector<Vertex> placed_nbrs;
        for (Vertex u : g_.adjacency[v])
            if (pos_of_[u] < static_cast<std::int32_t>(pos)) placed_nbrs.push_back(u);

        std::vector<LineId> new_lines;
        for (PointId p : candidates) {
            if (point_used_[p]) continue;
            if (++nodes_ > budget_) {
                aborted_ = true;
                return false;
            }
            new_lines.clear();
            bool ok = true;
            for (Vertex u : placed_nbrs) {
                const LineId l = plane_.join_unchecked(p, assign_[u]);
                if (l < 0 || line_used_[l] ||
                    std::find(new_lines.begin(), new_lines.end(), l) != new_lines.end()) {
                    ok = false;
                    break;
                }
                new_lines.push_back(l);
            }
            if (!ok) continue;

            for (LineId l : new_lines) use_line(l, 1);
            assign_[v] = p;
            point_used_[p] = 1;
            for (Vertex u : placed_nbrs) --pending_[u];
            pending_[v] -= static_cast<std::int32_t>(placed_nbrs.size());

            if (feasible(pos) && place(pos + 1)) return true;

            pending_[v] += static_cast<std::int32_t>(placed_nbrs.size());
            for (Vertex u : placed_nbrs) ++pending_[u];
            point_used_[p] = 0;
            assign_[v] = -1;
            for (LineId l : new_lines) use_line(l, -1);
            if (aborted_) return false;
        }
        return false;
    }

    // each placed vertex still needs one free line per unplaced neighbour
    bool feasible(std::size_t pos) const {
        for (std::size_t i = 0; i <= pos; ++i) {
            const Vertex u = order_[i];
            if (pending_[u] > free_lines_[assign_[u]]) return false;
        }
        return true;
    }

    const Graph& g_;
    const GenericPlane& plane_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::vector<Vertex> order_;
    std::vector<std::int32_t> pos_of_;
    std::vector<PointId> assign_;
    std::vector<std::uint8_t> point_used_;
    std::vector<std::int32_t> line_used_;
    std::vector<std::int32_t> free_lines_;
    std::vector<std::int32_t> pending_;
};

}  // namespace detail

/// Decides whether the graph embeds in the plane. Found results carry a
/// verified embedding whose plane reference is the generic view.
inline SearchResult exists_embedding(const GraphSpec& spec, const GenericPlane& plane,
                                     std::uint64_t budget = kDefaultBudget) {
    const Graph g = build_graph(spec);
    SearchResult res;
    // counting obstructions settle these without search
    if (g.num_vertices > plane.num_points() || static_cast<std::int32_t>(g.edges.size()) > plane.num_lines() ||
        g.max_degree() > plane.order() + 1)
        return res;

    detail::Backtracker bt(g, plane, budget);
    res.status = bt.run();
    res.nodes = bt.nodes();
    if (res.status == SearchStatus::Found) {
        Embedding e = make_embedding(plane, spec, bt.assignment());
        if (!verify_embedding(g, e, plane).passed())
            throw ConstructionFailed("oracle produced an embedding the verifier rejects");
        res.embedding = std::move(e);
    }
    return res;
}

/// Oracle on a coordinatized plane; the embedding is reported against it.
inline SearchResult exists_embedding(const GraphSpec& spec, const DesarguesianPlane& plane,
                                     std::uint64_t budget = kDefaultBudget) {
    auto res = exists_embedding(spec, GenericPlane::from(plane), budget);
    if (res.embedding) res.embedding->plane = plane_ref(plane);
    return res;
}

inline constexpr std::int32_t kPancyclicityMaxOrder = 4;

/// Existence of C_k for k = 3..|points|; entry k-3 holds the verdict for C_k.
inline std::vector<SearchResult> pancyclicity_table(const GenericPlane& plane, std::uint64_t budget = kDefaultBudget) {
    if (plane.order() > kPancyclicityMaxOrder)
        throw InvalidArgument("pancyclicity tables are exhaustive only up to order " +
                              std::to_string(kPancyclicityMaxOrder));
    std::vector<SearchResult> out;
    for (std::int32_t k = 3; k <= plane.num_points(); ++k) out.push_back(exists_embedding(GraphSpec::cycle(k), plane, budget));
    return out;
}

}  // namespace finplane
