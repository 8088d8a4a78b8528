#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"

using namespace gvf;

namespace {

DomainGraph path3() {
    const std::vector<Edge> e{{0, 1}, {1, 2}};
    return DomainGraph(3, e);
}

Errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no exception";
    return Errc::InvalidArgument;
}

}  // namespace

TEST(DomainGraph, MergesDuplicatesAndSortsRows) {
    const std::vector<Edge> e{{2, 0}, {0, 1}, {1, 0}, {2, 1}};
    DomainGraph g(3, e);
    EXPECT_EQ(g.edge_count(), 3u);
    const auto nb = g.neighbors(0);
    EXPECT_EQ(std::vector<VertexId>(nb.begin(), nb.end()), (std::vector<VertexId>{1, 2}));
    EXPECT_TRUE(g.has_edge(2, 1));
    EXPECT_FALSE(g.has_weights());
    EXPECT_EQ(g.weight(0, 2), 1.0);
}

TEST(DomainGraph, RejectsSelfLoopsAndBadIds) {
    const std::vector<Edge> loop{{1, 1}};
    EXPECT_THROW(DomainGraph(2, loop), Error);
    const std::vector<Edge> far{{0, 5}};
    EXPECT_THROW(DomainGraph(2, far), Error);
}

TEST(DomainGraph, RejectsNonPositiveOrConflictingWeights) {
    const std::vector<Edge> e{{0, 1}};
    EXPECT_THROW(DomainGraph(2, e, std::vector<double>{0.0}), Error);
    EXPECT_THROW(DomainGraph(2, e, std::vector<double>{-1.0}), Error);
    const std::vector<Edge> dup{{0, 1}, {1, 0}};
    EXPECT_THROW(DomainGraph(2, dup, std::vector<double>{1.0, 2.0}), Error);
}

TEST(GridGraph, SingleCell) {
    auto g = build_grid_graph({1, 1});
    EXPECT_EQ(g.vertex_count(), 1u);
    EXPECT_EQ(g.edge_count(), 0u);
}

TEST(GridGraph, TwoByTwoFourNeighbor) {
    auto g = build_grid_graph({2, 2, Adjacency::four_neighbor});
    EXPECT_EQ(g.vertex_count(), 4u);
    EXPECT_EQ(g.edge_count(), 4u);
    EXPECT_FALSE(g.has_edge(0, 3));
    EXPECT_FALSE(g.has_edge(1, 2));
}

TEST(GridGraph, EightNeighborCenterDegree) {
    Grid2D grid{3, 3, Adjacency::eight_neighbor};
    auto g = build_grid_graph(grid);
    EXPECT_EQ(g.degree(grid.vertex_id(1, 1)), 8u);
    EXPECT_EQ(g.degree(grid.vertex_id(0, 0)), 3u);
    EXPECT_EQ(g.edge_count(), 20u);  // 12 axis + 8 diagonal
}

TEST(GridGraph, PositionsAreCellCoordinates) {
    Grid2D grid{3, 2};
    auto g = build_grid_graph(grid);
    ASSERT_TRUE(g.has_positions());
    EXPECT_EQ(g.positions()[grid.vertex_id(2, 1)], (Point3{2, 1, 0}));
}

TEST(VertexGraph, SingleTriangleIsK3) {
    TriMesh m{{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {{0, 1, 2}}};
    auto g = build_vertex_graph(m);
    EXPECT_EQ(g.vertex_count(), 3u);
    EXPECT_EQ(g.edge_count(), 3u);
}

TEST(VertexGraph, TetrahedronIsK4) {
    auto g = build_vertex_graph(fixtures::tetrahedron());
    EXPECT_EQ(g.vertex_count(), 4u);
    EXPECT_EQ(g.edge_count(), 6u);
}

TEST(VertexGraph, OctahedronDegrees) {
    auto g = build_vertex_graph(fixtures::octahedron());
    EXPECT_EQ(g.vertex_count(), 6u);
    EXPECT_EQ(g.edge_count(), 12u);
    for (VertexId v = 0; v < 6; ++v) EXPECT_EQ(g.degree(v), 4u);
}

TEST(VertexGraph, EuclideanWeightsAreEdgeLengths) {
    TriMesh m{{{0, 0, 0}, {3, 0, 0}, {0, 4, 0}}, {{0, 1, 2}}};
    auto g = build_vertex_graph(m, EdgeLengths::euclidean);
    ASSERT_TRUE(g.has_weights());
    EXPECT_DOUBLE_EQ(g.weight(0, 1), 3.0);
    EXPECT_DOUBLE_EQ(g.weight(0, 2), 4.0);
    EXPECT_DOUBLE_EQ(g.weight(1, 2), 5.0);
}

TEST(CellGraph, TetrahedronDualIsK4) {
    auto g = build_cell_graph(fixtures::tetrahedron());
    EXPECT_EQ(g.vertex_count(), 4u);
    EXPECT_EQ(g.edge_count(), 6u);
}

TEST(CellGraph, OctahedronDualIsCube) {
    auto g = build_cell_graph(fixtures::octahedron());
    EXPECT_EQ(g.vertex_count(), 8u);
    EXPECT_EQ(g.edge_count(), 12u);
    for (VertexId v = 0; v < 8; ++v) EXPECT_EQ(g.degree(v), 3u);
}

TEST(CellGraph, DisjointTrianglesAreDisconnected) {
    TriMesh m{{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {5, 0, 0}, {6, 0, 0}, {5, 1, 0}}, {{0, 1, 2}, {3, 4, 5}}};
    auto g = build_cell_graph(m);
    EXPECT_EQ(g.vertex_count(), 2u);
    EXPECT_EQ(g.edge_count(), 0u);
    EXPECT_FALSE(is_connected(g));
}

TEST(CellGraph, SphereDualIsThreeRegular) {
    auto mesh = fixtures::icosphere(2);
    auto g = build_cell_graph(mesh);
    EXPECT_EQ(g.vertex_count(), 320u);
    EXPECT_EQ(g.edge_count(), 480u);
    EXPECT_TRUE(is_connected(g));
}

TEST(MeshValidation, Errors) {
    TriMesh degenerate{{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {{0, 1, 1}}};
    EXPECT_EQ(code_of([&] { validate_mesh(degenerate); }), Errc::DegenerateTriangle);
    TriMesh out_of_range{{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {{0, 1, 3}}};
    EXPECT_EQ(code_of([&] { validate_mesh(out_of_range); }), Errc::IndexOutOfRange);
    TriMesh fan{{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}}};
    EXPECT_EQ(code_of([&] { build_cell_graph(fan); }), Errc::NonManifoldEdge);
    EXPECT_EQ(code_of([&] { build_vertex_graph(fan); }), Errc::NonManifoldEdge);
}

TEST(Connectivity, Examples) {
    EXPECT_TRUE(is_connected(path3()));
    EXPECT_FALSE(is_connected(DomainGraph(2, std::vector<Edge>{})));
    EXPECT_TRUE(is_connected(DomainGraph()));
}

TEST(MultiSource, PathExamples) {
    auto g = path3();
    const std::vector<VertexId> s0{0};
    EXPECT_EQ(multi_source_distances(g, s0), (std::vector<double>{0, 1, 2}));
    const std::vector<VertexId> s02{0, 2};
    EXPECT_EQ(multi_source_distances(g, s02), (std::vector<double>{0, 1, 0}));
}

TEST(MultiSource, WeightedTriangleTakesDetour) {
    const std::vector<Edge> e{{0, 1}, {1, 2}, {0, 2}};
    DomainGraph g(3, e, std::vector<double>{1, 1, 3});
    const std::vector<VertexId> s{0};
    EXPECT_EQ(multi_source_distances(g, s, Metric::weighted)[2], 2.0);
    EXPECT_EQ(multi_source_distances(g, s, Metric::hop)[2], 1.0);
}

TEST(MultiSource, UnreachableAndErrors) {
    DomainGraph g(3, std::vector<Edge>{{0, 1}});
    const std::vector<VertexId> s{0};
    EXPECT_EQ(multi_source_distances(g, s)[2], kUnreachable);
    EXPECT_EQ(code_of([&] { multi_source_distances(g, std::span<const VertexId>{}); }), Errc::EmptySourceSet);
    EXPECT_EQ(code_of([&] { multi_source_distances(g, s, Metric::weighted); }), Errc::MissingWeights);
}

TEST(PairwiseDistances, Examples) {
    auto g = path3();
    const std::vector<VertexId> one{1};
    auto m1 = pairwise_guiding_distances(g, one);
    ASSERT_EQ(m1.size(), 1u);
    EXPECT_EQ(m1(0, 0), 0.0);
    const std::vector<VertexId> ends{0, 2};
    auto m = pairwise_guiding_distances(g, ends);
    EXPECT_EQ(m(0, 1), 2.0);
    EXPECT_EQ(m(1, 0), 2.0);

    Grid2D grid{3, 3};
    const std::vector<VertexId> corners{grid.vertex_id(0, 0), grid.vertex_id(2, 2)};
    EXPECT_EQ(pairwise_guiding_distances(build_grid_graph(grid), corners)(0, 1), 4.0);
}

TEST(PairwiseDistances, Errors) {
    DomainGraph g(3, std::vector<Edge>{{0, 1}});
    const std::vector<VertexId> split{0, 2};
    EXPECT_EQ(code_of([&] { pairwise_guiding_distances(g, split); }), Errc::UnreachablePair);
    const std::vector<VertexId> dup{0, 0};
    EXPECT_EQ(code_of([&] { pairwise_guiding_distances(g, dup); }), Errc::DuplicateVertex);
}

TEST(MultiSource, MatchesFloydWarshallOnRandomWeightedGraphs) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        auto sg = oracle::random_connected(3 + trial % 20, trial % 7, rng);
        std::vector<double> w;
        std::uniform_real_distribution<double> wd(0.1, 5.0);
        for (std::size_t i = 0; i < sg.edges.size(); ++i) w.push_back(wd(rng));
        std::vector<Edge> e(sg.edges.begin(), sg.edges.end());
        DomainGraph g(sg.n, e, w);
        const auto fw = oracle::floyd_warshall(sg.n, sg.edges, w);
        const std::vector<VertexId> src{0, sg.n - 1};
        const auto d = multi_source_distances(g, src, Metric::weighted);
        for (std::size_t u = 0; u < sg.n; ++u) EXPECT_NEAR(d[u], std::min(fw[0][u], fw[sg.n - 1][u]), 1e-9);
    }
}
