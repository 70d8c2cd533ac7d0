#include <gtest/gtest.h>

#include "finplane/embedding.hpp"

using namespace finplane;

TEST(Graph, Shapes) {
    const Graph c3 = build_graph(GraphSpec::cycle(3));
    EXPECT_EQ(c3.num_vertices, 3);
    EXPECT_EQ(c3.edges.size(), 3u);
    const Graph w4 = build_graph(GraphSpec::wheel(4));
    EXPECT_EQ(w4.num_vertices, 5);
    EXPECT_EQ(w4.edges.size(), 8u);
    EXPECT_EQ(w4.degree(0), 4);
    const Graph g3 = build_graph(GraphSpec::gear(3));
    EXPECT_EQ(g3.num_vertices, 7);
    EXPECT_EQ(g3.edges.size(), 9u);
    for (std::int32_t n = 3; n <= 9; ++n) {
        const Graph g = build_graph(GraphSpec::gear(n));
        EXPECT_EQ(g.num_vertices, 2 * n + 1);
        EXPECT_EQ(static_cast<std::int32_t>(g.edges.size()), 3 * n);
        EXPECT_EQ(g.degree(0), n);
        // rim alternates degree 3 (odd vertex ids) and degree 2
        for (Vertex v = 1; v <= 2 * n; ++v) EXPECT_EQ(g.degree(v), v % 2 == 1 ? 3 : 2);
    }
}

TEST(Graph, Malformed) {
    EXPECT_THROW(build_graph(GraphSpec::cycle(2)), InvalidArgument);
    EXPECT_THROW(build_graph(GraphSpec::wheel(2)), InvalidArgument);
    EXPECT_THROW(build_graph(GraphSpec::gear(1)), InvalidArgument);
    EXPECT_THROW(build_graph(GraphSpec::edge_list(3, {{0, 1}, {1, 0}})), InvalidArgument);
    EXPECT_THROW(build_graph(GraphSpec::edge_list(3, {{0, 0}})), InvalidArgument);
    EXPECT_THROW(build_graph(GraphSpec::edge_list(3, {{0, 3}})), InvalidArgument);
}

TEST(Verifier, AcceptsTriangleInFano) {
    const auto pg = pg_from_field(2);
    const auto e = make_embedding(pg, GraphSpec::cycle(3), {0, 1, 2});  // (0,0),(0,1),(1,0)
    const auto rep = verify_embedding(e, pg);
    EXPECT_TRUE(rep.passed());
    EXPECT_TRUE(rep.violations.empty());
}

TEST(Verifier, CollinearTriangleReusesALine) {
    const auto pg = pg_from_field(3);
    const auto e = make_embedding(pg, GraphSpec::cycle(3), {0, 1, 2});  // x = 0
    const auto rep = verify_embedding(e, pg);
    EXPECT_FALSE(rep.passed());
    EXPECT_FALSE(rep.edges_injective);
    EXPECT_TRUE(rep.vertices_injective);
}

TEST(Verifier, RepeatedPoint) {
    const auto pg = pg_from_field(3);
    Embedding e{plane_ref(pg), GraphSpec::cycle(4), {0, 1, 4, 1}, {}};
    const auto rep = verify_embedding(e, pg);
    EXPECT_FALSE(rep.vertices_injective);
    EXPECT_FALSE(rep.passed());
}

TEST(Verifier, DegreeBound) {
    // W_{q+2} in PG(2,2): the center would need 4 lines
    const auto pg = pg_from_field(2);
    Embedding e{plane_ref(pg), GraphSpec::wheel(4), {0, 1, 2, 3, 4}, {}};
    const auto rep = verify_embedding(e, pg);
    EXPECT_FALSE(rep.degree_bound_ok);
    EXPECT_FALSE(rep.passed());
}

TEST(Verifier, StoredLinesAreAudited) {
    const auto ag = ag_from_field(3);
    auto e = make_embedding(ag, GraphSpec::cycle(8), {1, 2, 3, 4, 6, 5, 7, 8});
    ASSERT_TRUE(verify_embedding(e, ag).passed());
    std::swap(e.edge_lines[0], e.edge_lines[1]);
    const auto rep = verify_embedding(e, ag);
    EXPECT_FALSE(rep.edges_well_defined);
}

TEST(Verifier, PointOutsidePlaneThrows) {
    const auto ag = ag_from_field(3);
    Embedding e{plane_ref(ag), GraphSpec::cycle(3), {0, 1, 9}, {}};
    EXPECT_THROW(verify_embedding(e, ag), InvalidArgument);
}

TEST(EmbeddingIo, RoundTripC8InAG3) {
    const auto ag = ag_from_field(3);
    const auto e = make_embedding(ag, GraphSpec::cycle(8), {1, 2, 3, 4, 6, 5, 7, 8});
    const auto j = embedding_to_json(e, ag);
    const auto back = embedding_from_json(nlohmann::json::parse(j.dump()), plane_ref(ag));
    EXPECT_EQ(back, e);
    EXPECT_TRUE(verify_embedding(back, ag).passed());
    // byte-stable
    EXPECT_EQ(embedding_to_json(back, ag).dump(), j.dump());
}

TEST(EmbeddingIo, GenericRoundTrip) {
    const auto g = cyclic_plane(2, {0, 1, 3});
    const auto e = make_embedding(g, GraphSpec::cycle(7), {0, 1, 2, 3, 4, 5, 6});
    const auto back = embedding_from_json(nlohmann::json::parse(embedding_to_json(e, nullptr).dump()));
    EXPECT_EQ(back, e);
    EXPECT_EQ(back.plane.model, "GENERIC");
}

TEST(EmbeddingIo, Rejections) {
    const auto ag = ag_from_field(3);
    const auto e = make_embedding(ag, GraphSpec::cycle(8), {1, 2, 3, 4, 6, 5, 7, 8});
    auto j = nlohmann::json::parse(embedding_to_json(e, ag).dump());

    auto dup = j;
    dup["vertices"][1][1] = dup["vertices"][0][1];
    EXPECT_THROW(embedding_from_json(dup), SchemaError);

    EXPECT_THROW(embedding_from_json(j, PlaneRef{"AG", 5}), SchemaError);

    auto bad_kind = j;
    bad_kind["graph"]["kind"] = "HELM";
    EXPECT_THROW(embedding_from_json(bad_kind), SchemaError);

    auto infinite = j;
    infinite["vertices"][0][1] = {1, 0, 0};
    EXPECT_THROW(embedding_from_json(infinite), SchemaError);

    auto out_of_field = j;
    out_of_field["vertices"][0][1] = {0, 7, 1};
    EXPECT_THROW(embedding_from_json(out_of_field), SchemaError);

    auto missing = j;
    missing["vertices"].erase(3);
    EXPECT_THROW(embedding_from_json(missing), SchemaError);

    auto edges = j;
    edges["edges"].erase(0);
    EXPECT_THROW(embedding_from_json(edges), SchemaError);

    EXPECT_THROW(embedding_from_json(nlohmann::json::parse("[1,2]")), SchemaError);
}
