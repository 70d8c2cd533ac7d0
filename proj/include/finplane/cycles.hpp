#pragma once

// Cycles in AG(2,q) and PG(2,q).
//
// A base path starts at P_0 on l_0 and steps P_i = (l_{i+1} + P_{i-1}) ∩ l_i,
// then P_q = (l_0 + P_{q-1}) ∩ l_q, and returns to l_0 at Q_0 = (l_1 + P_q) ∩ l_0.
// Gluing the path from Q_0 onto the previous one repeats until the start comes
// back; with a Hypothesis-J frame the result is a (q^2-1)-cycle through every
// affine point except O. All other cycles are cut out of it.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frame.hpp"
#include "oracle.hpp"
#include "singer.hpp"

namespace finplane {

struct BasePath {
    std::vector<PointId> points;  ///< P_0..P_q, P_i on l_i
    std::vector<LineId> links;    ///< q lines, links[i] joins P_i and P_{i+1}
    LineId return_link = -1;      ///< l_1 + P_q
    PointId return_point = -1;    ///< Q_0 on l_0
};

/// Closed cycle: lines[i] joins points[i] and points[(i+1) % size].
struct CycleChain {
    std::vector<PointId> points;
    std::vector<LineId> lines;

    std::int32_t size() const { return static_cast<std::int32_t>(points.size()); }
};

template <IncidencePlane P>
CycleChain make_chain(const P& plane, std::vector<PointId> points) {
    CycleChain c{std::move(points), {}};
    for (std::size_t i = 0; i < c.points.size(); ++i)
        c.lines.push_back(plane.line_through(c.points[i], c.points[(i + 1) % c.points.size()]));
    return c;
}

template <IncidencePlane P>
BasePath base_path(const P& plane, const Frame& fr, PointId start) {
    const std::int32_t q = fr.order();
    if (start == fr.origin || !plane.incident(start, fr.spokes[0]) || start == fr.directions[0])
        throw InvalidArgument("a base path starts at an affine point of l_0 other than the origin");
    BasePath path;
    path.points.push_back(start);
    for (std::int32_t i = 1; i <= q; ++i) {
        const std::int32_t cls = i < q ? i + 1 : 0;
        const LineId link = parallel(plane, fr, cls, path.points.back());
        path.links.push_back(link);
        path.points.push_back(plane.meet(link, fr.spokes[i]));
    }
    path.return_link = parallel(plane, fr, 1, path.points.back());
    path.return_point = plane.meet(path.return_link, fr.spokes[0]);
    return path;
}

inline BasePath base_path(const DesarguesianPlane& pg, const SlopeLabeling& lab, Element beta) {
    const Field& f = pg.field();
    if (beta == f.zero()) throw InvalidArgument("base paths need beta != 0");
    return base_path(pg, make_frame(pg, lab), pg.point_id(affine_point(f, f.zero(), beta)));
}

/// y(Q_0) / y(P_0); the same for every beta.
inline Element return_multiplier(const DesarguesianPlane& pg, const SlopeLabeling& lab) {
    const auto path = base_path(pg, lab, pg.field().one());
    return affine_coords(pg.field(), pg.point(path.return_point))[1];
}

/// Corrected closed form for labeling A; index q+1 returns Q_0.
inline std::array<Element, 2> path_closed_form(const Field& f, Element alpha, Element beta, std::uint32_t i) {
    const std::uint32_t q = f.order();
    if (i > q + 1) throw InvalidArgument("path index out of range");
    const Element one = f.one();
    const Element one_minus = f.sub(one, alpha), one_plus = f.add(one, alpha);
    if (alpha == f.zero() || one_minus == f.zero() || one_plus == f.zero())
        throw DegenerateAlpha("closed form needs alpha != 0, 1, -1");
    const Element tail = f.div(beta, f.mul(f.mul(one_plus, one_plus), one_minus));
    if (i == 0) return {f.zero(), beta};
    if (i + 1 < q) {
        const Element y = f.div(f.mul(beta, f.pow(one_plus, i - 1)), one_minus);
        return {f.div(y, f.pow(alpha, i)), y};
    }
    if (i + 1 == q) return {tail, tail};
    if (i == q) return {tail, f.zero()};
    return {f.zero(), f.neg(f.mul(alpha, tail))};
}

/// Glue base paths from `start` until the walk returns. Point j lies on l_{j mod (q+1)}.
template <IncidencePlane P>
CycleChain glued_cycle(const P& plane, const Frame& fr, PointId start) {
    CycleChain c;
    PointId cur = start;
    do {
        auto path = base_path(plane, fr, cur);
        c.points.insert(c.points.end(), path.points.begin(), path.points.end());
        c.lines.insert(c.lines.end(), path.links.begin(), path.links.end());
        c.lines.push_back(path.return_link);
        cur = path.return_point;
        if (c.points.size() > static_cast<std::size_t>(plane.num_points()))
            throw ConstructionFailed("glued paths never return to the start");
    } while (cur != start);
    return c;
}

inline CycleChain long_cycle(const DesarguesianPlane& pg, const SlopeLabeling& lab) {
    const Field& f = pg.field();
    return glued_cycle(pg, make_frame(pg, lab), pg.point_id(affine_point(f, f.zero(), f.one())));
}

/// [O, C_1..C_{q^2-2}, C_0]: the edge C_0 C_1 is rerouted through O along l_0 and l_1.
inline CycleChain reroute_through_origin(const DesarguesianPlane& pg, const Frame& fr, const CycleChain& lc) {
    std::vector<PointId> pts{fr.origin};
    pts.insert(pts.end(), lc.points.begin() + 1, lc.points.end());
    pts.push_back(lc.points.front());
    return make_chain(pg, std::move(pts));
}

/// Points of the parabola y = x^2 with x = 0..k-1.
inline std::vector<PointId> parabola_points(const DesarguesianPlane& plane, std::int32_t k) {
    const Field& f = plane.field();
    std::vector<PointId> out;
    for (std::int32_t t = 0; t < k; ++t) {
        const Element x = f.element(static_cast<std::uint64_t>(t));
        out.push_back(plane.point_id(affine_point(f, x, f.mul(x, x))));
    }
    return out;
}

/// The q+1 affine points with x^2 - c1 xy + c0 y^2 = 1, where z^2 + c1 z + c0 is
/// the first irreducible monic quadratic. This is the norm form of GF(q^2)/GF(q).
inline std::vector<PointId> ellipse_points(const DesarguesianPlane& plane) {
    const Field& f = plane.field();
    const std::uint32_t q = f.order();
    std::optional<std::pair<Element, Element>> coeffs;
    for (std::uint64_t enc = 0; enc < std::uint64_t{q} * q && !coeffs; ++enc) {
        const Element c0 = f.element(enc % q), c1 = f.element(enc / q);
        bool has_root = false;
        for (std::uint32_t z = 0; z < q && !has_root; ++z) {
            const Element e{z};
            has_root = f.add(f.add(f.mul(e, e), f.mul(c1, e)), c0) == f.zero();
        }
        if (!has_root) coeffs = {c0, c1};
    }
    const auto [c0, c1] = *coeffs;
    std::vector<PointId> out;
    for (std::uint32_t x = 0; x < q; ++x)
        for (std::uint32_t y = 0; y < q; ++y) {
            const Element ex{x}, ey{y};
            const Element n = f.add(f.sub(f.mul(ex, ex), f.mul(c1, f.mul(ex, ey))), f.mul(c0, f.mul(ey, ey)));
            if (n == f.one()) out.push_back(plane.point_id(affine_point(f, ex, ey)));
        }
    std::sort(out.begin(), out.end());
    return out;
}

enum class CycleRoute {
    Parabola,
    Ellipse,
    Shortcut,      ///< [O, C_1..C_{k-1}]
    ShortcutSkip,  ///< O, C_1, C_{k-1} collinear: skip ahead one spoke round
    LongCycle,
    Origin,        ///< q^2: long cycle rerouted through O
    Ladder,        ///< PG rungs q^2+1..q^2+q
    Singer,
    Oracle,
};

inline const char* route_name(CycleRoute r) {
    switch (r) {
        case CycleRoute::Parabola: return "parabola";
        case CycleRoute::Ellipse: return "ellipse";
        case CycleRoute::Shortcut: return "shortcut";
        case CycleRoute::ShortcutSkip: return "shortcut-skip";
        case CycleRoute::LongCycle: return "long-cycle";
        case CycleRoute::Origin: return "origin";
        case CycleRoute::Ladder: return "ladder";
        case CycleRoute::Singer: return "singer";
        case CycleRoute::Oracle: return "oracle";
    }
    return "?";
}

struct CycleResult {
    Embedding embedding;
    CycleRoute route = CycleRoute::Oracle;
};

/// Singer Hamiltonian cycle as PG(2,q) point ids: residue i, then i+1.
inline CycleChain singer_cycle(const DesarguesianPlane& pg, const SingerModel& m) {
    return make_chain(pg, m.residue_points);
}

/// Singer cycle in the cyclic model; edge {i, i+1} lies on line L_{i-d2}.
inline Embedding singer_cycle_cyclic(const GenericPlane& cyclic, const SingerModel& m) {
    std::vector<PointId> pts(m.n);
    for (std::int32_t i = 0; i < m.n; ++i) pts[i] = i;
    return make_embedding(cyclic, GraphSpec::cycle(m.n), std::move(pts));
}

/// Builds and verifies every cycle of AG(2,q) and PG(2,q) for one q.
class CycleFactory {
   public:
    explicit CycleFactory(std::uint32_t q, std::uint64_t oracle_budget = kDefaultBudget)
        : pg_(pg_from_field(q)), ag_(pg_.with_model(Model::AG)), budget_(oracle_budget) {
        if (q > 2) {
            auto r = hypothesis_j_search(pg_.field());
            if (auto* c = std::get_if<HypothesisJCertificate>(&r)) {
                cert_ = *c;
                labeling_ = labeling_for(pg_.field(), *c);
                frame_ = make_frame(pg_, *labeling_);
                long_ = long_cycle(pg_, *labeling_);
                if (long_->size() != static_cast<std::int32_t>(q * q - 1))
                    throw ConjectureViolation("certified long cycle has length " + std::to_string(long_->size()));
            }
        }
    }

    std::int32_t order() const { return pg_.order(); }
    const DesarguesianPlane& pg() const { return pg_; }
    const DesarguesianPlane& ag() const { return ag_; }
    const std::optional<HypothesisJCertificate>& certificate() const { return cert_; }
    const std::optional<SlopeLabeling>& labeling() const { return labeling_; }
    const std::optional<Frame>& frame() const { return frame_; }
    const std::optional<CycleChain>& long_chain() const { return long_; }

    CycleChain cycle_q2() const {
        require_long();
        return reroute_through_origin(pg_, *frame_, *long_);
    }

    CycleResult ag_cycle(std::int32_t k) const {
        const std::int32_t q = order();
        if (k < 3 || k > q * q) throw InvalidArgument("AG(2," + std::to_string(q) + ") has cycles of length 3.." + std::to_string(q * q));
        auto [pts, route] = affine_points(k);
        if (route == CycleRoute::Oracle) return oracle(GraphSpec::cycle(k), ag_);
        return finish(ag_, GraphSpec::cycle(k), std::move(pts), route);
    }

    CycleResult pg_cycle(std::int32_t k) const {
        const std::int32_t q = order();
        const std::int32_t n = q * q + q + 1;
        if (k < 3 || k > n) throw InvalidArgument("PG(2," + std::to_string(q) + ") has cycles of length 3.." + std::to_string(n));
        if (k == n) {
            const auto m = singer_model(static_cast<std::uint32_t>(q));
            return finish(pg_, GraphSpec::cycle(k), m.residue_points, CycleRoute::Singer);
        }
        if (k <= q * q) {
            auto [pts, route] = affine_points(k);
            if (route != CycleRoute::Oracle) return finish(pg_, GraphSpec::cycle(k), std::move(pts), route);
        } else if (long_ && q >= 4) {
            return finish(pg_, GraphSpec::cycle(k), ladder(k), CycleRoute::Ladder);
        }
        return oracle(GraphSpec::cycle(k), pg_);
    }

    /// Ladder rung of length k in q^2-q+3..q^2+q, as PG point ids.
    std::vector<PointId> ladder(std::int32_t k) const {
        require_long();
        const std::int32_t q = order();
        if (q < 4 || k < q * q - q + 3 || k > q * q + q) throw InvalidArgument("no ladder rung of length " + std::to_string(k));
        const auto& lc = long_->points;
        const Frame& fr = *frame_;
        const PointId O = fr.origin;
        auto D = [&](std::int32_t i) { return fr.directions[i]; };
        auto Q = [&](std::int32_t i) { return i == 0 ? lc[0] : lc[q * q - q + i - 2]; };

        std::vector<PointId> pts;
        auto tail = [&](std::int32_t from) {  // [(j), Q_j] for j >= from, then Q_0 and C_1..C_{q^2-q-1}
            for (std::int32_t j = from; j <= q; ++j) {
                pts.push_back(D(j));
                pts.push_back(Q(j));
            }
        };
        auto finish_path = [&] {
            pts.insert(pts.end(), lc.begin() + 1, lc.begin() + (q * q - q));
        };

        const std::int32_t top = q * q + q;
        if (k >= top - 2) {
            pts = {Q(2), D(2)};
            tail(3);
            if (k == top) pts.insert(pts.end(), {D(1), O});
            pts.push_back(Q(0));
            if (k == top - 1) pts.push_back(O);
        } else if (k == top - 3) {
            pts = {Q(2), O, Q(3)};
            tail(4);
            pts.push_back(Q(0));
        } else if (k == top - 4) {
            pts = {D(3), Q(3)};
            tail(4);
            pts.push_back(Q(0));
        } else {
            // q^2+q+3-2i directly, one more with the detour through (2)
            const std::int32_t detour = (top + 3 - k) % 2;
            const std::int32_t i = (top + 3 + detour - k) / 2;
            pts = {D(3)};
            if (detour) pts.push_back(D(2));
            pts.insert(pts.end(), {O, Q(i)});
            tail(i + 1);
            pts.push_back(Q(0));
        }
        finish_path();
        if (static_cast<std::int32_t>(pts.size()) != k) throw ConstructionFailed("ladder rung has the wrong size");
        return pts;
    }

   private:
    void require_long() const {
        if (!long_) throw NoCertificate("no Hypothesis-J certificate for q = " + std::to_string(order()));
    }

    // Cycles on affine points only, so the same ids serve AG and PG.
    std::pair<std::vector<PointId>, CycleRoute> affine_points(std::int32_t k) const {
        const std::int32_t q = order();
        if (k <= q) return {parabola_points(pg_, k), CycleRoute::Parabola};
        if (k == q + 1) return {ellipse_points(pg_), CycleRoute::Ellipse};
        if (!long_) return {{}, CycleRoute::Oracle};
        const auto& lc = long_->points;
        const std::int32_t L = long_->size();
        if (k == q * q) return {cycle_q2().points, CycleRoute::Origin};
        if (k == q * q - 1) return {lc, CycleRoute::LongCycle};
        const PointId O = frame_->origin;
        std::vector<PointId> pts{O};
        if (pg_.line_through(O, lc[1]) != pg_.line_through(O, lc[k - 1])) {
            pts.insert(pts.end(), lc.begin() + 1, lc.begin() + k);
            return {pts, CycleRoute::Shortcut};
        }
        pts.insert(pts.end(), lc.begin() + 1, lc.begin() + (k - 2));
        pts.push_back(lc[(k + q - 2) % L]);
        pts.push_back(lc[(k + q - 1) % L]);
        return {pts, CycleRoute::ShortcutSkip};
    }

    CycleResult finish(const DesarguesianPlane& plane, const GraphSpec& spec, std::vector<PointId> pts,
                       CycleRoute route) const {
        Embedding e = make_embedding(plane, spec, std::move(pts));
        const auto rep = verify_embedding(e, plane);
        if (!rep.passed())
            throw ConstructionFailed(spec.name() + " via " + route_name(route) + " in " + model_name(plane.model()) +
                                     "(2," + std::to_string(order()) + "): " + rep.violations.front());
        return {std::move(e), route};
    }

    CycleResult oracle(const GraphSpec& spec, const DesarguesianPlane& plane) const {
        auto r = exists_embedding(spec, plane, budget_);
        if (!r.embedding)
            throw ConstructionFailed(spec.name() + " in " + model_name(plane.model()) + "(2," + std::to_string(order()) +
                                     "): oracle " + status_name(r.status));
        return {std::move(*r.embedding), CycleRoute::Oracle};
    }

    DesarguesianPlane pg_;
    DesarguesianPlane ag_;
    std::uint64_t budget_;
    std::optional<HypothesisJCertificate> cert_;
    std::optional<SlopeLabeling> labeling_;
    std::optional<Frame> frame_;
    std::optional<CycleChain> long_;
};

}  // namespace finplane
