#pragma once

// Wheels W_n and gears G_n in projective planes.
//
// Everything except the arc route is incidence-only and runs on any
// projective plane. Choices are made by smallest point id among the
// candidates that satisfy the stated constraints; every plan is verified
// before it is returned.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycles.hpp"

namespace finplane {

enum class WheelRoute { Arc, Lines, Oracle };

inline const char* route_name(WheelRoute r) {
    switch (r) {
        case WheelRoute::Arc: return "ARC";
        case WheelRoute::Lines: return "LINES";
        case WheelRoute::Oracle: return "ORACLE";
    }
    return "?";
}

enum class GearRoute { FromWheel, PathsEven, PathsOdd, MaxEven, MaxOdd, Oracle };

inline const char* route_name(GearRoute r) {
    switch (r) {
        case GearRoute::FromWheel: return "FROM_WHEEL";
        case GearRoute::PathsEven: return "PATHS_EVEN";
        case GearRoute::PathsOdd: return "PATHS_ODD";
        case GearRoute::MaxEven: return "MAX_EVEN";
        case GearRoute::MaxOdd: return "MAX_ODD";
        case GearRoute::Oracle: return "ORACLE";
    }
    return "?";
}

/// Center plus rim; for gears the spokes go to rim positions 0, 2, 4, ...
template <class Route>
struct HubPlan {
    PointId center = -1;
    std::vector<PointId> rim;
    Route route{};

    std::vector<PointId> vertices() const {
        std::vector<PointId> v{center};
        v.insert(v.end(), rim.begin(), rim.end());
        return v;
    }
};

using WheelPlan = HubPlan<WheelRoute>;
using GearPlan = HubPlan<GearRoute>;

namespace detail {

inline void check_hub_size(std::int32_t q, std::int32_t n, const char* what) {
    if (n < 3) throw InvalidArgument(std::string(what) + " needs n >= 3");
    if (n > q + 1)
        throw ImpossibleDegree(std::string(what) + " with n = " + std::to_string(n) + " needs a point on " +
                               std::to_string(n) + " lines; planes of order " + std::to_string(q) + " have " +
                               std::to_string(q + 1));
}

template <IncidencePlane P>
bool plan_verifies(const P& plane, const GraphSpec& spec, const std::vector<PointId>& vertices) {
    std::vector<PointId> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    return verify_embedding(make_embedding(plane, spec, vertices), plane).passed();
}

}  // namespace detail

/// The conic y = x^2 with its point (0:1:0); in even characteristic also the nucleus (1:0:0).
inline std::vector<PointId> arc_points(const DesarguesianPlane& pg) {
    if (!pg.projective()) throw InvalidArgument("arcs are taken in the projective plane");
    const Field& f = pg.field();
    std::vector<PointId> out;
    for (std::uint32_t t = 0; t < f.order(); ++t) {
        const Element x{t};
        out.push_back(pg.point_id(affine_point(f, x, f.mul(x, x))));
    }
    out.push_back(pg.vertical_direction());
    if (f.characteristic() == 2) out.push_back(pg.direction(f.zero()));
    std::sort(out.begin(), out.end());
    return out;
}

/// Wheel from O, a line l missing O with points P_1..P_{q+1}, and a line m
/// through P_1: the rim alternates P's on l and Q's on m. Odd n closes along l;
/// even n closes through a point T on OP_n.
template <IncidencePlane P>
std::optional<WheelPlan> wheel_by_lines(const P& plane, std::int32_t n) {
    const std::int32_t q = plane.order();
    detail::check_hub_size(q, n, "wheel");
    const PointId O = 0;
    LineId ell = -1;
    for (LineId l = 0; l < plane.num_lines() && ell < 0; ++l)
        if (!plane.incident(O, l)) ell = l;
    const auto Ps = plane.points_on(ell);
    std::vector<LineId> spokes;
    for (PointId p : Ps) spokes.push_back(plane.line_through(O, p));
    LineId m = -1;
    for (LineId l : plane.lines_through(Ps[0]))
        if (l != ell && l != spokes[0]) {
            m = l;
            break;
        }

    WheelPlan plan{O, {}, WheelRoute::Lines};
    for (std::int32_t i = 0; i < n; ++i) plan.rim.push_back(i % 2 == 0 ? Ps[i] : plane.meet(spokes[i], m));
    const GraphSpec spec = GraphSpec::wheel(n);
    if (n % 2 == 1) {
        if (detail::plan_verifies(plane, spec, plan.vertices())) return plan;
        return std::nullopt;
    }
    for (PointId T : plane.points_on(spokes[n - 1])) {
        if (T == O) continue;
        plan.rim.back() = T;
        if (detail::plan_verifies(plane, spec, plan.vertices())) return plan;
    }
    return std::nullopt;
}

namespace detail {

template <IncidencePlane P, class Route>
Embedding hub_embedding(const P& plane, const GraphSpec& spec, const HubPlan<Route>& plan) {
    Embedding e = make_embedding(plane, spec, plan.vertices());
    const auto rep = verify_embedding(e, plane);
    if (!rep.passed())
        throw ConstructionFailed(spec.name() + " via " + route_name(plan.route) + ": " + rep.violations.front());
    return e;
}

template <class Route, IncidencePlane P>
HubPlan<Route> oracle_plan(const P& plane, const GraphSpec& spec, std::uint64_t budget) {
    const auto r = exists_embedding(spec, GenericPlane::from(plane), budget);
    if (r.status == SearchStatus::NotFound)
        throw NoEmbedding(spec.name() + " does not embed in a plane of order " + std::to_string(plane.order()) +
                          " (exhaustive search)");
    if (!r.embedding) throw ConstructionFailed(spec.name() + ": oracle budget exhausted");
    HubPlan<Route> plan{r.embedding->vertices[0], {}, Route::Oracle};
    plan.rim.assign(r.embedding->vertices.begin() + 1, r.embedding->vertices.end());
    return plan;
}

}  // namespace detail

inline constexpr std::int32_t kOracleMaxOrder = 4;

template <IncidencePlane P>
WheelPlan wheel_plan(const P& plane, std::int32_t n, std::uint64_t budget = kDefaultBudget) {
    const std::int32_t q = plane.order();
    detail::check_hub_size(q, n, "wheel");
    if constexpr (std::is_same_v<P, DesarguesianPlane>) {
        const auto arc = arc_points(plane);
        if (n + 1 <= static_cast<std::int32_t>(arc.size())) {
            WheelPlan plan{arc[0], {}, WheelRoute::Arc};
            plan.rim.assign(arc.begin() + 1, arc.begin() + 1 + n);
            return plan;
        }
    }
    if (auto plan = wheel_by_lines(plane, n)) return *plan;
    if (q <= kOracleMaxOrder) return detail::oracle_plan<WheelRoute>(plane, GraphSpec::wheel(n), budget);
    throw ConstructionFailed("W_" + std::to_string(n) + ": no closing point T verifies");
}

template <IncidencePlane P>
Embedding wheel(const P& plane, std::int32_t n, std::uint64_t budget = kDefaultBudget) {
    return detail::hub_embedding(plane, GraphSpec::wheel(n), wheel_plan(plane, n, budget));
}

/// W_{2n} with every other spoke removed.
template <IncidencePlane P>
GearPlan gear_from_wheel(const P& plane, std::int32_t n, std::uint64_t budget = kDefaultBudget) {
    if (n < 3 || 2 * n > plane.order() + 1)
        throw InvalidArgument("gear from wheel needs 3 <= n <= (q+1)/2");
    const auto w = wheel_plan(plane, 2 * n, budget);
    return {w.center, w.rim, GearRoute::FromWheel};
}

namespace detail {

/// First point of l_i (not O, not (i)) off every avoided line and unequal to every avoided point.
template <IncidencePlane P>
std::optional<PointId> first_on_spoke(const P& plane, const Frame& fr, std::int32_t i,
                                      const std::vector<LineId>& avoid_lines, const std::vector<PointId>& avoid_points = {}) {
    for (PointId x : spoke_points(plane, fr, i)) {
        if (std::find(avoid_points.begin(), avoid_points.end(), x) != avoid_points.end()) continue;
        if (std::any_of(avoid_lines.begin(), avoid_lines.end(), [&](LineId l) { return plane.incident(x, l); }))
            continue;
        return x;
    }
    return std::nullopt;
}

}  // namespace detail

namespace detail {

// Gear from the base path of starts[p0] and a second path chosen to close the rim.
template <IncidencePlane P>
std::optional<GearPlan> gear_paths_from(const P& plane, const Frame& fr, std::int32_t n,
                                        const std::vector<std::vector<PointId>>& paths, std::size_t p0) {
    const GraphSpec spec = GraphSpec::gear(n);
    const auto& Pp = paths[p0];
    if (n % 2 == 0) {
        for (std::size_t s = 0; s < paths.size(); ++s) {
            if (s == p0) continue;
            const auto& Qp = paths[s];
            GearPlan plan{fr.origin, {}, GearRoute::PathsEven};
            plan.rim.assign(Pp.begin(), Pp.begin() + (n - 1));
            plan.rim.push_back(fr.directions[0]);
            plan.rim.insert(plan.rim.end(), Qp.begin() + 1, Qp.begin() + n);
            plan.rim.push_back(fr.directions[1]);
            if (plan_verifies(plane, spec, plan.vertices())) return plan;
        }
        return std::nullopt;
    }

    // Q_{n-3} = (l_k + P_0) ∩ l_{n-3} for k in {1, n}, then T on l_n
    for (std::int32_t k : {1, n}) {
        const PointId X = plane.meet(parallel(plane, fr, k, Pp[0]), fr.spokes[n - 3]);
        if (X == Pp[n - 3]) continue;
        for (std::size_t s = 0; s < paths.size(); ++s) {
            const auto& Qp = paths[s];
            if (s == p0 || Qp[n - 3] != X) continue;
            for (PointId T : plane.points_on(fr.spokes[n])) {
                if (T == fr.origin) continue;
                GearPlan plan{fr.origin, {}, GearRoute::PathsOdd};
                plan.rim.assign(Pp.begin(), Pp.begin() + n);
                plan.rim.push_back(fr.directions[0]);
                plan.rim.push_back(T);
                plan.rim.insert(plan.rim.end(), Qp.begin(), Qp.begin() + (n - 2));
                if (plan_verifies(plane, spec, plan.vertices())) return plan;
            }
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Two disjoint base paths joined through (0) and (1). Needs (q+1)/2 < n <= q.
template <IncidencePlane P>
std::optional<GearPlan> gear_paths(const P& plane, const Frame& fr, std::int32_t n) {
    const std::int32_t q = plane.order();
    if (n < 3 || n > q) throw InvalidArgument("path gears need 3 <= n <= q");
    const auto starts = spoke_points(plane, fr, 0);
    std::vector<std::vector<PointId>> paths;
    for (PointId s : starts) paths.push_back(base_path(plane, fr, s).points);

    for (std::size_t p0 = 0; p0 < paths.size(); ++p0)
        if (auto plan = detail::gear_paths_from(plane, fr, n, paths, p0)) return plan;
    return std::nullopt;
}

/// G_{q+1}: the rim alternates the points at infinity and one point P_i on each l_i.
template <IncidencePlane P>
std::optional<GearPlan> gear_max(const P& plane, const Frame& fr) {
    const std::int32_t q = plane.order();
    const GraphSpec spec = GraphSpec::gear(q + 1);
    auto par = [&](std::int32_t cls, PointId x) { return parallel(plane, fr, cls, x); };
    auto D = [&](std::int32_t i) { return fr.directions[i]; };
    std::vector<PointId> Pt(q + 1, -1);
    auto pick = [&](std::int32_t i, std::vector<LineId> avoid, std::vector<PointId> avoid_pts = {}) {
        const auto x = detail::first_on_spoke(plane, fr, i, avoid, avoid_pts);
        if (!x) return false;
        Pt[i] = *x;
        return true;
    };

    GearPlan plan{fr.origin, {}, q % 2 == 0 ? GearRoute::MaxEven : GearRoute::MaxOdd};
    if (q % 2 == 0) {
        bool ok = pick(1, {});
        for (std::int32_t i = 3; ok && i <= q - 1; i += 2) ok = pick(i, {par(i - 1, Pt[i - 2])});
        ok = ok && pick(0, {par(q, Pt[q - 1])});
        for (std::int32_t i = 2; ok && i <= q; i += 2) {
            std::vector<LineId> avoid{par(i - 1, Pt[i - 2])};
            if (i == q) avoid.push_back(par(0, Pt[1]));
            ok = pick(i, avoid);
        }
        if (!ok) return std::nullopt;
        // (0) P_1 (2) P_3 .. P_{q-1} (q) P_0 (1) P_2 (3) .. (q-1) P_q
        for (std::int32_t i = 1; i <= q - 1; i += 2) plan.rim.insert(plan.rim.end(), {D(i - 1), Pt[i]});
        plan.rim.insert(plan.rim.end(), {D(q), Pt[0]});
        for (std::int32_t i = 2; i <= q; i += 2) plan.rim.insert(plan.rim.end(), {D(i - 1), Pt[i]});
    } else {
        bool ok = pick(1, {});
        for (std::int32_t i = 3; ok && i <= q; i += 2) ok = pick(i, {par(i - 1, Pt[i - 2])});
        ok = ok && pick(2, {});
        for (std::int32_t i = 4; ok && i <= q - 1; i += 2) {
            std::vector<LineId> avoid{par(i - 1, Pt[i - 2])};
            if (i == q - 1) avoid.push_back(par(q, Pt[1]));
            ok = pick(i, avoid);
        }
        if (!ok) return std::nullopt;
        // T off l_0 + P_q, l_1 + P_2, l_0, l_1, the line at infinity and the P_i
        std::optional<PointId> T;
        const std::vector<LineId> avoid{par(0, Pt[q]), par(1, Pt[2]), fr.spokes[0], fr.spokes[1], fr.infinity};
        for (PointId x = 0; x < plane.num_points() && !T; ++x) {
            if (std::find(Pt.begin() + 1, Pt.end(), x) != Pt.end()) continue;
            if (std::any_of(avoid.begin(), avoid.end(), [&](LineId l) { return plane.incident(x, l); })) continue;
            T = x;
        }
        if (!T) return std::nullopt;
        // (1) P_2 (3) .. P_{q-1} (q) P_1 (2) P_3 .. (q-1) P_q (0) T
        for (std::int32_t i = 2; i <= q - 1; i += 2) plan.rim.insert(plan.rim.end(), {D(i - 1), Pt[i]});
        plan.rim.insert(plan.rim.end(), {D(q), Pt[1]});
        for (std::int32_t i = 3; i <= q; i += 2) plan.rim.insert(plan.rim.end(), {D(i - 1), Pt[i]});
        plan.rim.insert(plan.rim.end(), {D(0), *T});
    }
    if (!detail::plan_verifies(plane, spec, plan.vertices())) return std::nullopt;
    return plan;
}

/// Frame used for gears: the certificate frame on coordinatized planes, else the default one.
template <IncidencePlane P>
Frame gear_frame(const P& plane) {
    if constexpr (std::is_same_v<P, DesarguesianPlane>) {
        if (plane.order() > 2) {
            auto r = hypothesis_j_search(plane.field());
            if (auto* c = std::get_if<HypothesisJCertificate>(&r)) return make_frame(plane, labeling_for(plane.field(), *c));
        }
    }
    return default_frame(plane);
}

inline constexpr std::int32_t kGearOracleFallbackBelow = 8;

template <IncidencePlane P>
GearPlan gear_plan(const P& plane, std::int32_t n, std::uint64_t budget = kDefaultBudget) {
    const std::int32_t q = plane.order();
    if (!plane.projective()) throw InvalidArgument("gears are built in projective planes");
    detail::check_hub_size(q, n, "gear");
    const GraphSpec spec = GraphSpec::gear(n);
    if (q <= kOracleMaxOrder || (q == 5 && n == 4)) return detail::oracle_plan<GearRoute>(plane, spec, budget);

    std::optional<GearPlan> plan;
    if (2 * n <= q + 1) {
        plan = gear_from_wheel(plane, n, budget);
    } else {
        const Frame fr = gear_frame(plane);
        plan = n <= q ? gear_paths(plane, fr, n) : gear_max(plane, fr);
    }
    if (plan) return *plan;
    if (q < kGearOracleFallbackBelow) return detail::oracle_plan<GearRoute>(plane, spec, budget);
    throw ConstructionFailed(spec.name() + ": constraint search exhausted");
}

template <IncidencePlane P>
Embedding gear(const P& plane, std::int32_t n, std::uint64_t budget = kDefaultBudget) {
    return detail::hub_embedding(plane, GraphSpec::gear(n), gear_plan(plane, n, budget));
}

}  // namespace finplane
