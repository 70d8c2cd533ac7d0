#include <gtest/gtest.h>

#include <algorithm>

#include "finplane/number_theory.hpp"
#include "finplane/wheelgear.hpp"

using namespace finplane;

namespace {

template <class P>
void expect_hub(const P& plane, const Embedding& e, const GraphSpec& spec) {
    EXPECT_EQ(e.graph, spec);
    const auto rep = verify_embedding(e, plane);
    EXPECT_TRUE(rep.passed()) << spec.name() << " q=" << plane.order() << ": "
                              << (rep.violations.empty() ? "" : rep.violations.front());
}

// rim vertices are never the center, and no rim edge runs through the center
template <class P>
void expect_hub_shape(const P& plane, const Embedding& e) {
    const Graph g = build_graph(e.graph);
    const PointId center = e.vertices[0];
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto [u, v] = g.edges[i];
        if (u == 0 || v == 0) continue;
        EXPECT_NE(e.vertices[u], center);
        EXPECT_FALSE(plane.incident(center, e.edge_lines[i]));
    }
}

std::vector<std::uint32_t> orders(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint32_t> out;
    for (auto q : prime_powers_in(lo, hi)) out.push_back(static_cast<std::uint32_t>(q));
    return out;
}

}  // namespace

TEST(Wheel, Examples) {
    const auto pg5 = pg_from_field(5);
    expect_hub(pg5, wheel(pg5, 6), GraphSpec::wheel(6));
    EXPECT_EQ(wheel_plan(pg5, 6).route, WheelRoute::Lines);
    const auto pg4 = pg_from_field(4);
    EXPECT_EQ(arc_points(pg4).size(), 6u);
    EXPECT_EQ(wheel_plan(pg4, 5).route, WheelRoute::Arc);
    expect_hub(pg4, wheel(pg4, 5), GraphSpec::wheel(5));
    EXPECT_THROW(wheel(pg5, 7), ImpossibleDegree);
    EXPECT_THROW(wheel(pg5, 2), InvalidArgument);
}

TEST(Wheel, ArcsHaveNoThreeCollinear) {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 8u, 9u}) {
        const auto pg = pg_from_field(q);
        const auto arc = arc_points(pg);
        EXPECT_EQ(arc.size(), q % 2 ? q + 1 : q + 2);
        for (std::size_t a = 0; a < arc.size(); ++a)
            for (std::size_t b = a + 1; b < arc.size(); ++b)
                for (std::size_t c = b + 1; c < arc.size(); ++c)
                    EXPECT_FALSE(pg.incident(arc[c], pg.line_through(arc[a], arc[b])));
    }
}

TEST(Wheel, AllSizesUpToSixteen) {
    for (std::uint32_t q : orders(2, 16)) {
        const auto pg = pg_from_field(q);
        for (std::int32_t n = 3; n <= static_cast<std::int32_t>(q) + 1; ++n) {
            if (q == 3 && n == 4) {
                // exhaustive search: no W_4 in the plane of order 3
                EXPECT_THROW(wheel(pg, n), NoEmbedding);
                continue;
            }
            const auto e = wheel(pg, n);
            expect_hub(pg, e, GraphSpec::wheel(n));
            expect_hub_shape(pg, e);
        }
        EXPECT_THROW(wheel(pg, static_cast<std::int32_t>(q) + 2), ImpossibleDegree);
    }
}

TEST(Wheel, GenericPlanes) {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
        const auto cyc = cyclic_plane(static_cast<std::int32_t>(q), singer_difference_set(q));
        for (std::int32_t n = 3; n <= static_cast<std::int32_t>(q) + 1; ++n) {
            if (q == 3 && n == 4) {
                EXPECT_THROW(wheel(cyc, n), NoEmbedding);
                continue;
            }
            expect_hub(cyc, wheel(cyc, n), GraphSpec::wheel(n));
        }
    }
}

TEST(Gear, RoutesMatchTheCaseSplit) {
    const auto pg5 = pg_from_field(5), pg7 = pg_from_field(7), pg8 = pg_from_field(8), pg9 = pg_from_field(9);
    EXPECT_EQ(gear_plan(pg7, 3).route, GearRoute::FromWheel);
    EXPECT_EQ(gear_plan(pg9, 5).route, GearRoute::FromWheel);
    EXPECT_EQ(gear_plan(pg5, 3).route, GearRoute::FromWheel);
    EXPECT_EQ(gear_plan(pg7, 7).route, GearRoute::PathsOdd);
    EXPECT_EQ(gear_plan(pg8, 6).route, GearRoute::PathsEven);
    EXPECT_EQ(gear_plan(pg5, 4).route, GearRoute::Oracle);
    EXPECT_EQ(gear_plan(pg8, 9).route, GearRoute::MaxEven);
    EXPECT_EQ(gear_plan(pg7, 8).route, GearRoute::MaxOdd);
    EXPECT_EQ(gear_plan(pg5, 6).route, GearRoute::MaxOdd);
    EXPECT_EQ(gear(pg8, 9).vertices.size(), 19u);
}

TEST(Gear, SmallOrders) {
    EXPECT_THROW(gear(pg_from_field(2), 3), NoEmbedding);
    const auto pg3 = pg_from_field(3);
    for (std::int32_t n : {3, 4}) {
        EXPECT_EQ(gear_plan(pg3, n).route, GearRoute::Oracle);
        expect_hub(pg3, gear(pg3, n), GraphSpec::gear(n));
    }
    const auto pg4 = pg_from_field(4);
    for (std::int32_t n : {3, 4, 5}) expect_hub(pg4, gear(pg4, n), GraphSpec::gear(n));
    EXPECT_THROW(gear(pg4, 6), ImpossibleDegree);
    EXPECT_THROW(gear(ag_from_field(5), 3), InvalidArgument);
}

TEST(Gear, AllSizesFiveToSixteen) {
    for (std::uint32_t q : orders(5, 16)) {
        const auto pg = pg_from_field(q);
        for (std::int32_t n = 3; n <= static_cast<std::int32_t>(q) + 1; ++n) {
            const auto e = gear(pg, n);
            expect_hub(pg, e, GraphSpec::gear(n));
            expect_hub_shape(pg, e);
            const auto inf = std::count(e.edge_lines.begin(), e.edge_lines.end(), pg.infinity_line());
            EXPECT_LE(inf, 1);
        }
        EXPECT_THROW(gear(pg, static_cast<std::int32_t>(q) + 2), ImpossibleDegree);
    }
}

TEST(Gear, GenericPlanes) {
    for (std::uint32_t q : {4u, 5u, 7u}) {
        const auto cyc = cyclic_plane(static_cast<std::int32_t>(q), singer_difference_set(q));
        for (std::int32_t n = 3; n <= static_cast<std::int32_t>(q) + 1; ++n) {
            const auto e = gear(cyc, n);
            expect_hub(cyc, e, GraphSpec::gear(n));
            expect_hub_shape(cyc, e);
        }
    }
}

TEST(Gear, MaxConstructionDirectly) {
    for (std::uint32_t q : {5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
        const auto pg = pg_from_field(q);
        const auto plan = gear_max(pg, gear_frame(pg));
        ASSERT_TRUE(plan) << q;
        EXPECT_EQ(plan->rim.size(), 2 * q + 2);
        EXPECT_EQ(plan->center, pg.origin());
    }
    EXPECT_THROW(gear_from_wheel(pg_from_field(5), 4), InvalidArgument);
    EXPECT_THROW(gear_paths(pg_from_field(5), gear_frame(pg_from_field(5)), 6), InvalidArgument);
}
