#pragma once

// A frame fixes an origin O, a line at infinity, and an ordering l_0..l_q of
// the lines through O. The point (i) is l_i on the line at infinity and
// "l_i + X" is the line through X and (i). Every path, cycle and gear
// construction in this library is written against a frame, so it runs on any
// projective plane; the coordinatized planes supply frames from slope labelings.

#include <algorithm>
#include <optional>
#include <vector>

#include "generic_plane.hpp"
#include "hypothesis_j.hpp"

namespace finplane {

struct Frame {
    PointId origin = 0;
    LineId infinity = 0;
    std::vector<LineId> spokes;       ///< l_0..l_q, all through origin
    std::vector<PointId> directions;  ///< (0)..(q) on the line at infinity

    std::int32_t order() const { return static_cast<std::int32_t>(spokes.size()) - 1; }
};

/// l_cls + X.
template <IncidencePlane P>
LineId parallel(const P& plane, const Frame& fr, std::int32_t cls, PointId x) {
    return plane.line_through(x, fr.directions.at(cls));
}

/// Index i with X on l_i, for X an affine point other than the origin.
template <IncidencePlane P>
std::int32_t spoke_index(const P& plane, const Frame& fr, PointId x) {
    for (std::int32_t i = 0; i <= fr.order(); ++i)
        if (plane.incident(x, fr.spokes[i])) return i;
    throw InvalidArgument("point is on no line through the origin");
}

/// Affine points of l_i other than the origin, increasing id.
template <IncidencePlane P>
std::vector<PointId> spoke_points(const P& plane, const Frame& fr, std::int32_t i) {
    std::vector<PointId> out;
    for (PointId x : plane.points_on(fr.spokes.at(i)))
        if (x != fr.origin && x != fr.directions[i]) out.push_back(x);
    return out;
}

/// Frame for a plane without coordinates: origin is point 0, the line at
/// infinity is the smallest-id line missing it, spokes follow their directions' ids.
template <IncidencePlane P>
Frame default_frame(const P& plane) {
    if (!plane.projective()) throw InvalidArgument("frames need a projective plane");
    Frame fr;
    fr.origin = 0;
    for (LineId l = 0; l < plane.num_lines(); ++l)
        if (!plane.incident(fr.origin, l)) {
            fr.infinity = l;
            break;
        }
    fr.directions = plane.points_on(fr.infinity);
    for (PointId d : fr.directions) fr.spokes.push_back(plane.line_through(fr.origin, d));
    return fr;
}

enum class Labeling { A, B };

/// Slopes of l_0..l_q; nullopt is the vertical line x = 0.
///  A: l_0: x=0, l_i: y = alpha^i x (1 <= i <= q-1), l_q: y=0
///  B: l_0: x=0, l_i: y = alpha^i x (1 <= i <= q-2), l_{q-1}: y=0, l_q: y=x
struct SlopeLabeling {
    Labeling kind = Labeling::A;
    Element alpha;
    std::vector<std::optional<Element>> slopes;
};

inline SlopeLabeling make_labeling(const Field& f, Labeling kind, Element alpha) {
    const std::uint32_t q = f.order();
    SlopeLabeling lab{kind, alpha, {}};
    lab.slopes.push_back(std::nullopt);
    const std::uint32_t last_power = kind == Labeling::A ? q - 1 : q - 2;
    for (std::uint32_t i = 1; i <= last_power; ++i) lab.slopes.push_back(f.pow(alpha, i));
    lab.slopes.push_back(f.zero());
    if (kind == Labeling::B) lab.slopes.push_back(f.one());
    std::vector<std::uint32_t> seen;
    for (std::size_t i = 1; i < lab.slopes.size(); ++i) seen.push_back(lab.slopes[i]->value);
    std::sort(seen.begin(), seen.end());
    if (lab.slopes.size() != q + 1 || std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw InvalidArgument("labeling needs a primitive alpha so that the slopes are distinct");
    return lab;
}

/// Labeling matching a certificate: A for the gamma route, B otherwise.
inline SlopeLabeling labeling_for(const Field& f, const HypothesisJCertificate& cert) {
    return make_labeling(f, cert.uses_labeling_b() ? Labeling::B : Labeling::A, cert.alpha);
}

inline Frame make_frame(const DesarguesianPlane& pg, const SlopeLabeling& lab) {
    if (!pg.projective()) throw InvalidArgument("frames live in the projective plane");
    const Field& f = pg.field();
    Frame fr;
    fr.origin = pg.origin();
    fr.infinity = pg.infinity_line();
    for (const auto& s : lab.slopes) {
        if (s) {
            fr.spokes.push_back(pg.line_id(slope_line(f, *s, f.zero())));
            fr.directions.push_back(pg.direction(*s));
        } else {
            fr.spokes.push_back(pg.line_id(vertical_line(f, f.zero())));
            fr.directions.push_back(pg.vertical_direction());
        }
    }
    return fr;
}

}  // namespace finplane
