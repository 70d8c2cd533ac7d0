#pragma once

// Incidence-only planes: point ids 0..N-1 and lines as sorted id lists.
// Used for externally supplied planes, the cyclic (Singer) model, and as the
// table-driven view the exhaustive oracle runs on.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "plane.hpp"

namespace finplane {

template <class P>
concept IncidencePlane = requires(const P& plane, PointId a, LineId l) {
    { plane.order() } -> std::convertible_to<std::int32_t>;
    { plane.num_points() } -> std::convertible_to<std::int32_t>;
    { plane.num_lines() } -> std::convertible_to<std::int32_t>;
    { plane.projective() } -> std::convertible_to<bool>;
    { plane.has_point(a) } -> std::convertible_to<bool>;
    { plane.line_through(a, a) } -> std::convertible_to<LineId>;
    { plane.meet(l, l) } -> std::convertible_to<PointId>;
    { plane.incident(a, l) } -> std::convertible_to<bool>;
    { plane.points_on(l) } -> std::convertible_to<std::vector<PointId>>;
    { plane.lines_through(a) } -> std::convertible_to<std::vector<LineId>>;
};

/// Known automorphisms an exhaustive search may quotient by.
enum class PlaneSymmetry {
    None,           ///< nothing assumed
    PointTransitive,///< a group acting transitively on points (cyclic model)
    TwoTransitive,  ///< transitive on ordered pairs of distinct points (AG/PG over a field)
};

class GenericPlane {
   public:
    GenericPlane(std::int32_t q, std::int32_t num_points, std::vector<std::vector<PointId>> lines,
                 PlaneSymmetry symmetry = PlaneSymmetry::None)
        : q_(q), n_(num_points), lines_(std::move(lines)), symmetry_(symmetry) {
        if (q_ < 2) throw SchemaError("plane order must be at least 2");
        if (n_ < 1) throw SchemaError("plane must have points");
        incidence_.assign(static_cast<std::size_t>(n_) * lines_.size(), 0);
        through_.assign(n_, {});
        join_.assign(static_cast<std::size_t>(n_) * n_, -1);
        for (LineId l = 0; l < static_cast<LineId>(lines_.size()); ++l) {
            auto& pts = lines_[l];
            std::sort(pts.begin(), pts.end());
            for (PointId p : pts) {
                if (p < 0 || p >= n_) throw SchemaError("line " + std::to_string(l) + " has point id out of range");
                incidence_[idx(p, l)] = 1;
                through_[p].push_back(l);
            }
            for (std::size_t i = 0; i < pts.size(); ++i)
                for (std::size_t j = i + 1; j < pts.size(); ++j) {
                    auto& a = join_[static_cast<std::size_t>(pts[i]) * n_ + pts[j]];
                    auto& b = join_[static_cast<std::size_t>(pts[j]) * n_ + pts[i]];
                    if (a < 0) a = b = l;
                }
        }
    }

    template <IncidencePlane P>
    static GenericPlane from(const P& plane, PlaneSymmetry symmetry = PlaneSymmetry::None) {
        std::vector<std::vector<PointId>> lines;
        for (LineId l = 0; l < plane.num_lines(); ++l) lines.push_back(plane.points_on(l));
        return GenericPlane(plane.order(), plane.num_points(), std::move(lines), symmetry);
    }

    static GenericPlane from(const DesarguesianPlane& plane) {
        return from<DesarguesianPlane>(plane, PlaneSymmetry::TwoTransitive);
    }

    std::int32_t order() const { return q_; }
    std::int32_t num_points() const { return n_; }
    std::int32_t num_lines() const { return static_cast<std::int32_t>(lines_.size()); }
    bool projective() const { return n_ == q_ * q_ + q_ + 1; }
    PlaneSymmetry symmetry() const { return symmetry_; }
    const std::vector<std::vector<PointId>>& lines() const { return lines_; }

    bool has_point(PointId p) const { return p >= 0 && p < n_; }
    bool has_line(LineId l) const { return l >= 0 && l < num_lines(); }

    LineId line_through(PointId a, PointId b) const {
        if (!has_point(a) || !has_point(b)) throw InvalidArgument("point id out of range");
        if (a == b) throw InvalidArgument("line_through needs two distinct points");
        const LineId l = join_[static_cast<std::size_t>(a) * n_ + b];
        if (l < 0) throw InvalidArgument("points " + std::to_string(a) + " and " + std::to_string(b) + " share no line");
        return l;
    }
    /// Line through a and b, or -1; no checks, for hot loops.
    LineId join_unchecked(PointId a, PointId b) const { return join_[static_cast<std::size_t>(a) * n_ + b]; }

    PointId meet(LineId l, LineId m) const {
        if (l == m) throw InvalidArgument("meet needs two distinct lines");
        for (PointId p : lines_.at(l))
            if (incident(p, m)) return p;
        throw InvalidArgument("lines " + std::to_string(l) + " and " + std::to_string(m) + " do not meet");
    }

    bool incident(PointId p, LineId l) const { return incidence_[idx(p, l)] != 0; }
    std::vector<PointId> points_on(LineId l) const { return lines_.at(l); }
    std::vector<LineId> lines_through(PointId p) const { return through_.at(p); }

    friend bool operator==(const GenericPlane& a, const GenericPlane& b) {
        return a.q_ == b.q_ && a.n_ == b.n_ && a.lines_ == b.lines_;
    }

   private:
    std::size_t idx(PointId p, LineId l) const { return static_cast<std::size_t>(l) * n_ + p; }

    std::int32_t q_;
    std::int32_t n_;
    std::vector<std::vector<PointId>> lines_;
    PlaneSymmetry symmetry_;
    std::vector<std::uint8_t> incidence_;
    std::vector<std::vector<LineId>> through_;
    std::vector<LineId> join_;
};

static_assert(IncidencePlane<GenericPlane>);
static_assert(IncidencePlane<DesarguesianPlane>);

struct PlaneReport {
    bool ok = true;
    std::vector<std::string> violations;

    void fail(std::string v) {
        ok = false;
        violations.push_back(std::move(v));
    }
};

/// Checks the axioms of a projective plane (q^2+q+1 points) or an affine plane (q^2 points).
/// Violations are collected, not thrown.
inline PlaneReport check_plane_axioms(const GenericPlane& plane) {
    PlaneReport rep;
    const std::int32_t q = plane.order(), n = plane.num_points();
    const bool proj = n == q * q + q + 1;
    const bool aff = n == q * q;
    if (!proj && !aff) rep.fail("point count " + std::to_string(n) + " fits neither AG(2," + std::to_string(q) +
                                ") nor PG(2," + std::to_string(q) + ")");
    const std::int32_t expect_lines = proj ? n : q * q + q;
    const std::size_t line_size = proj ? q + 1 : q;
    if (plane.num_lines() != expect_lines)
        rep.fail("expected " + std::to_string(expect_lines) + " lines, found " + std::to_string(plane.num_lines()));

    const auto& lines = plane.lines();
    std::set<std::vector<PointId>> seen;
    for (std::size_t l = 0; l < lines.size(); ++l) {
        if (lines[l].size() != line_size)
            rep.fail("line " + std::to_string(l) + " has " + std::to_string(lines[l].size()) + " points, expected " +
                     std::to_string(line_size));
        if (std::adjacent_find(lines[l].begin(), lines[l].end()) != lines[l].end())
            rep.fail("line " + std::to_string(l) + " repeats a point");
        if (!seen.insert(lines[l]).second) rep.fail("duplicate line " + std::to_string(l));
    }

    // every pair of points on exactly one line
    std::vector<std::int32_t> pair_count(static_cast<std::size_t>(n) * n, 0);
    for (const auto& pts : lines)
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                if (pts[i] != pts[j]) ++pair_count[static_cast<std::size_t>(pts[i]) * n + pts[j]];
    std::size_t bad_pairs = 0;
    for (PointId a = 0; a < n; ++a)
        for (PointId b = a + 1; b < n; ++b) {
            const auto c = pair_count[static_cast<std::size_t>(a) * n + b];
            if (c != 1 && bad_pairs++ < 10)
                rep.fail("points " + std::to_string(a) + "," + std::to_string(b) + " lie on " + std::to_string(c) +
                         " lines");
        }

    const auto L = static_cast<LineId>(lines.size());
    if (proj) {
        std::size_t bad = 0;
        for (LineId l = 0; l < L; ++l)
            for (LineId m = l + 1; m < L; ++m) {
                std::size_t common = 0;
                for (PointId p : lines[l]) common += plane.incident(p, m) ? 1 : 0;
                if (common != 1 && bad++ < 10)
                    rep.fail("lines " + std::to_string(l) + "," + std::to_string(m) + " meet in " +
                             std::to_string(common) + " points");
            }
    } else if (aff) {
        // Playfair: through each point off a line exactly one line misses it
        std::size_t bad = 0;
        for (LineId l = 0; l < L; ++l)
            for (PointId p = 0; p < n; ++p) {
                if (plane.incident(p, l)) continue;
                std::size_t parallels = 0;
                for (LineId m : plane.lines_through(p)) {
                    bool disjoint = true;
                    for (PointId r : lines[m])
                        if (plane.incident(r, l)) disjoint = false;
                    parallels += disjoint ? 1 : 0;
                }
                if (parallels != 1 && bad++ < 10)
                    rep.fail("point " + std::to_string(p) + " has " + std::to_string(parallels) +
                             " parallels to line " + std::to_string(l));
            }
    }

    // quadrangle: four points, no three collinear
    auto collinear = [&](PointId a, PointId b, PointId c) {
        for (LineId l : plane.lines_through(a))
            if (plane.incident(b, l) && plane.incident(c, l)) return true;
        return false;
    };
    bool quad = false;
    for (PointId a = 0; a < n && !quad; ++a)
        for (PointId b = a + 1; b < n && !quad; ++b)
            for (PointId c = b + 1; c < n && !quad; ++c) {
                if (collinear(a, b, c)) continue;
                for (PointId d = c + 1; d < n && !quad; ++d)
                    quad = !collinear(a, b, d) && !collinear(a, c, d) && !collinear(b, c, d);
            }
    if (!quad) rep.fail("no four points with no three collinear");
    return rep;
}

// Plane file: {"q":3,"points":13,"lines":[[0,1,2,3],...]}, sorted ids.

inline nlohmann::ordered_json plane_to_json(const GenericPlane& plane) {
    nlohmann::ordered_json j;
    j["q"] = plane.order();
    j["points"] = plane.num_points();
    j["lines"] = plane.lines();
    return j;
}

inline GenericPlane plane_from_json(const nlohmann::json& j, PlaneSymmetry symmetry = PlaneSymmetry::None) {
    try {
        if (!j.is_object() || !j.contains("q") || !j.contains("points") || !j.contains("lines"))
            throw SchemaError("plane file needs q, points and lines");
        auto lines = j.at("lines").get<std::vector<std::vector<PointId>>>();
        for (const auto& l : lines)
            if (!std::is_sorted(l.begin(), l.end())) throw SchemaError("plane file lines must list sorted point ids");
        return GenericPlane(j.at("q").get<std::int32_t>(), j.at("points").get<std::int32_t>(), std::move(lines), symmetry);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("malformed plane file: ") + e.what());
    }
}

inline GenericPlane load_plane(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError("cannot parse " + path + ": " + e.what());
    }
    return plane_from_json(j);
}

inline void save_plane(const GenericPlane& plane, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw SchemaError("cannot write " + path);
    out << plane_to_json(plane).dump() << '\n';
}

/// Cyclic model of PG(2,q) from a perfect difference set: lines are the translates D + t.
inline GenericPlane cyclic_plane(std::int32_t q, const std::vector<std::int32_t>& difference_set) {
    const std::int32_t n = q * q + q + 1;
    std::vector<std::vector<PointId>> lines;
    for (std::int32_t t = 0; t < n; ++t) {
        std::vector<PointId> l;
        for (auto d : difference_set) l.push_back((d + t) % n);
        std::sort(l.begin(), l.end());
        lines.push_back(std::move(l));
    }
    return GenericPlane(q, n, std::move(lines), PlaneSymmetry::PointTransitive);
}

}  // namespace finplane
