#pragma once

// Coordinatized AG(2,q) and PG(2,q).
//
// Points and lines are homogeneous triples, canonicalized so the first
// nonzero coordinate is 1. Point (x:y:z) lies on line [a:b:c] iff
// ax + by + cz = 0, so the line at infinity is [0:0:1].
//
// Integer ids, shared by both models:
//   points  affine (x,y)            -> x*q + y         in [0, q^2)
//           direction of slope m    -> q^2 + m
//           vertical direction      -> q^2 + q
//   lines   y = m x + c             -> m*q + c         in [0, q^2)
//           x = c                   -> q^2 + c
//           line at infinity        -> q^2 + q
// The affine model keeps exactly the ids below q^2 (points) and q^2 + q (lines).

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "field.hpp"

namespace finplane {

using PointId = std::int32_t;
using LineId = std::int32_t;

struct ProjPoint {
    std::array<Element, 3> c{};
    friend constexpr auto operator<=>(const ProjPoint&, const ProjPoint&) = default;
};

struct ProjLine {
    std::array<Element, 3> c{};
    friend constexpr auto operator<=>(const ProjLine&, const ProjLine&) = default;
};

namespace detail {

inline std::array<Element, 3> canonical(const Field& f, std::array<Element, 3> v) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (v[i] == f.zero()) continue;
        const Element s = f.inv(v[i]);
        for (auto& x : v) x = f.mul(x, s);
        return v;
    }
    throw InvalidArgument("homogeneous triple is all zero");
}

inline std::array<Element, 3> cross(const Field& f, const std::array<Element, 3>& u, const std::array<Element, 3>& v) {
    return {f.sub(f.mul(u[1], v[2]), f.mul(u[2], v[1])), f.sub(f.mul(u[2], v[0]), f.mul(u[0], v[2])),
            f.sub(f.mul(u[0], v[1]), f.mul(u[1], v[0]))};
}

}  // namespace detail

inline ProjPoint make_point(const Field& f, Element x, Element y, Element z) {
    return {detail::canonical(f, {x, y, z})};
}
inline ProjPoint affine_point(const Field& f, Element x, Element y) { return make_point(f, x, y, f.one()); }
inline ProjLine make_line(const Field& f, Element a, Element b, Element c) { return {detail::canonical(f, {a, b, c})}; }

inline ProjLine line_at_infinity(const Field& f) { return {{f.zero(), f.zero(), f.one()}}; }

/// The line y = m x + c.
inline ProjLine slope_line(const Field& f, Element m, Element c) { return make_line(f, m, f.neg(f.one()), c); }
/// The line x = c.
inline ProjLine vertical_line(const Field& f, Element c) { return make_line(f, f.one(), f.zero(), f.neg(c)); }

inline bool incident(const Field& f, const ProjPoint& P, const ProjLine& l) {
    Element s = f.zero();
    for (std::size_t i = 0; i < 3; ++i) s = f.add(s, f.mul(P.c[i], l.c[i]));
    return s == f.zero();
}

inline bool is_affine(const Field& f, const ProjPoint& P) { return P.c[2] != f.zero(); }

/// Affine coordinates of a point with z != 0.
inline std::array<Element, 2> affine_coords(const Field& f, const ProjPoint& P) {
    if (!is_affine(f, P)) throw InvalidArgument("point at infinity has no affine coordinates");
    const Element s = f.inv(P.c[2]);
    return {f.mul(P.c[0], s), f.mul(P.c[1], s)};
}

inline ProjLine line_through(const Field& f, const ProjPoint& P, const ProjPoint& Q) {
    if (P == Q) throw InvalidArgument("line_through needs two distinct points");
    return {detail::canonical(f, detail::cross(f, P.c, Q.c))};
}

inline ProjPoint intersect(const Field& f, const ProjLine& l, const ProjLine& m) {
    if (l == m) throw InvalidArgument("intersect needs two distinct lines");
    return {detail::canonical(f, detail::cross(f, l.c, m.c))};
}

/// The line through P in the parallel class of l (l + P).
inline ProjLine parallel_line(const Field& f, const ProjLine& l, const ProjPoint& P) {
    const ProjLine inf = line_at_infinity(f);
    if (l == inf) throw InvalidArgument("the line at infinity has no parallel class");
    if (!is_affine(f, P)) throw InvalidArgument("parallel_line needs an affine point");
    if (incident(f, P, l)) return l;
    return line_through(f, P, intersect(f, l, inf));
}

enum class Model { PG, AG };

inline const char* model_name(Model m) { return m == Model::PG ? "PG" : "AG"; }

/// AG(2,q) or PG(2,q) over a field, with the typed API and an integer-id incidence view.
class DesarguesianPlane {
   public:
    DesarguesianPlane(Field f, Model model) : f_(std::move(f)), model_(model) {
        const std::int32_t q = static_cast<std::int32_t>(f_.order());
        q_ = q;
        if (q > 4096) throw InvalidArgument("plane order too large for integer ids");
    }

    const Field& field() const { return f_; }
    Model model() const { return model_; }
    bool projective() const { return model_ == Model::PG; }
    std::int32_t order() const { return q_; }
    std::int32_t num_points() const { return projective() ? q_ * q_ + q_ + 1 : q_ * q_; }
    std::int32_t num_lines() const { return projective() ? q_ * q_ + q_ + 1 : q_ * q_ + q_; }

    bool has_point(PointId id) const { return id >= 0 && id < num_points(); }
    bool has_line(LineId id) const { return id >= 0 && id < num_lines(); }

    ProjPoint point(PointId id) const {
        check_point(id);
        const std::int32_t qq = q_ * q_;
        if (id < qq) return affine_point(f_, f_.element(id / q_), f_.element(id % q_));
        if (id < qq + q_) return make_point(f_, f_.one(), f_.element(id - qq), f_.zero());
        return make_point(f_, f_.zero(), f_.one(), f_.zero());
    }

    PointId point_id(const ProjPoint& P) const {
        PointId id;
        if (P.c[2] != f_.zero()) {
            auto xy = affine_coords(f_, P);
            id = static_cast<PointId>(xy[0].value) * q_ + static_cast<PointId>(xy[1].value);
        } else if (P.c[0] != f_.zero()) {
            id = q_ * q_ + static_cast<PointId>(f_.div(P.c[1], P.c[0]).value);
        } else {
            id = q_ * q_ + q_;
        }
        check_point(id);
        return id;
    }

    ProjLine line(LineId id) const {
        check_line(id);
        const std::int32_t qq = q_ * q_;
        if (id < qq) return slope_line(f_, f_.element(id / q_), f_.element(id % q_));
        if (id < qq + q_) return vertical_line(f_, f_.element(id - qq));
        return line_at_infinity(f_);
    }

    LineId line_id(const ProjLine& l) const {
        LineId id;
        if (l.c[1] != f_.zero()) {
            // y = -(a/b) x - (c/b)
            const Element binv = f_.inv(l.c[1]);
            const Element m = f_.neg(f_.mul(l.c[0], binv));
            const Element c = f_.neg(f_.mul(l.c[2], binv));
            id = static_cast<LineId>(m.value) * q_ + static_cast<LineId>(c.value);
        } else if (l.c[0] != f_.zero()) {
            id = q_ * q_ + static_cast<LineId>(f_.neg(f_.div(l.c[2], l.c[0])).value);
        } else {
            id = q_ * q_ + q_;
        }
        check_line(id);
        return id;
    }

    LineId line_through(PointId a, PointId b) const {
        if (a == b) throw InvalidArgument("line_through needs two distinct points");
        return line_id(finplane::line_through(f_, point(a), point(b)));
    }

    /// Common point of two lines; in the affine model parallel lines throw.
    PointId meet(LineId l, LineId m) const {
        if (l == m) throw InvalidArgument("meet needs two distinct lines");
        const ProjPoint P = intersect(f_, line(l), line(m));
        if (!projective() && !is_affine(f_, P)) throw InvalidArgument("parallel lines do not meet in AG");
        return point_id(P);
    }

    bool incident(PointId p, LineId l) const { return finplane::incident(f_, point(p), line(l)); }

    std::vector<PointId> points_on(LineId l) const {
        const ProjLine L = line(l);
        std::vector<PointId> out;
        for (PointId p = 0; p < num_points(); ++p)
            if (finplane::incident(f_, point(p), L)) out.push_back(p);
        return out;
    }

    std::vector<LineId> lines_through(PointId p) const {
        const ProjPoint P = point(p);
        std::vector<LineId> out;
        for (LineId l = 0; l < num_lines(); ++l)
            if (finplane::incident(f_, P, line(l))) out.push_back(l);
        return out;
    }

    PointId origin() const { return 0; }
    /// The point at infinity of a direction: slope m, or vertical.
    PointId direction(Element slope) const { return q_ * q_ + static_cast<PointId>(slope.value); }
    PointId vertical_direction() const { return q_ * q_ + q_; }
    LineId infinity_line() const { return q_ * q_ + q_; }

    /// The same field with the other model.
    DesarguesianPlane with_model(Model m) const { return DesarguesianPlane(f_, m); }

   private:
    void check_point(PointId id) const {
        if (!has_point(id))
            throw InvalidArgument("point id " + std::to_string(id) + " is not in " + model_name(model_) + "(2," +
                                  std::to_string(q_) + ")");
    }
    void check_line(LineId id) const {
        if (!has_line(id))
            throw InvalidArgument("line id " + std::to_string(id) + " is not in " + model_name(model_) + "(2," +
                                  std::to_string(q_) + ")");
    }

    Field f_;
    Model model_;
    std::int32_t q_ = 0;
};

inline DesarguesianPlane pg_from_field(std::uint32_t q) { return DesarguesianPlane(Field::of_order(q), Model::PG); }
inline DesarguesianPlane ag_from_field(std::uint32_t q) { return DesarguesianPlane(Field::of_order(q), Model::AG); }

}  // namespace finplane
