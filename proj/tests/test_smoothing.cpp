#include <gtest/gtest.h>

#include "support.hpp"

using namespace gvf;

namespace {
DomainGraph path(std::size_t n) { return support::to_domain(oracle::path(n)); }
}  // namespace

TEST(Gradient, LinearField) {
    Grid2D grid{4, 3};
    ScalarField f(grid.size());
    for (std::size_t y = 0; y < 3; ++y)
        for (std::size_t x = 0; x < 4; ++x) f[grid.vertex_id(x, y)] = static_cast<double>(x);
    auto g = finite_diff_gradient(grid, f, 1.0);
    for (double v : g.ddx) EXPECT_EQ(v, 1.0);
    for (double v : g.ddy) EXPECT_EQ(v, 0.0);
}

TEST(Gradient, ConstantField) {
    Grid2D grid{3, 3};
    auto g = finite_diff_gradient(grid, ScalarField(9, 4.0), 0.5);
    for (double v : g.ddx) EXPECT_EQ(v, 0.0);
    for (double v : g.ddy) EXPECT_EQ(v, 0.0);
}

TEST(Gradient, QuadraticInteriorIsExact) {
    Grid2D grid{5, 1};
    ScalarField f{0, 1, 4, 9, 16};
    auto g = finite_diff_gradient(grid, f, 1.0);
    for (std::size_t x = 1; x < 4; ++x) EXPECT_EQ(g.ddx[x], 2.0 * static_cast<double>(x));
    EXPECT_EQ(g.ddx[0], 1.0);
    EXPECT_EQ(g.ddx[4], 7.0);
}

TEST(Gradient, SpacingAndErrors) {
    Grid2D grid{3, 1};
    auto g = finite_diff_gradient(grid, ScalarField{0, 1, 2}, 0.5);
    EXPECT_EQ(g.ddx[1], 2.0);
    EXPECT_THROW(finite_diff_gradient(grid, ScalarField{0, 1}, 1.0), Error);
    EXPECT_THROW(finite_diff_gradient(grid, ScalarField{0, 1, 2}, 0.0), Error);
}

TEST(ConstrainedSmooth, Examples) {
    auto g = path(3);
    const std::vector<VertexId> fixed{0, 2};
    EXPECT_EQ(constrained_smooth(g, ScalarField{0, 0, 4}, fixed, 1), (ScalarField{0, 2, 4}));
    EXPECT_EQ(constrained_smooth(g, ScalarField{3, 3, 3}, fixed, 7), (ScalarField{3, 3, 3}));
    const ScalarField any{0.1, -7, 2.5};
    EXPECT_EQ(constrained_smooth(g, any, fixed, 0), any);
}

TEST(ConstrainedSmooth, JacobiUsesPreviousPass) {
    auto g = path(4);
    const std::vector<VertexId> fixed{0};
    // Simultaneous update: v1 = (0+0)/2, v2 = (0+8)/2, v3 = 0.
    EXPECT_EQ(constrained_smooth(g, ScalarField{0, 0, 0, 8}, fixed, 1), (ScalarField{0, 0, 4, 0}));
}

TEST(Harmonic, PathConvergesToLine) {
    auto g = path(5);
    const std::vector<VertexId> fixed{0, 4};
    auto r = harmonic_relax(g, ScalarField{0, 0, 0, 0, 4}, fixed, 100000, 1e-9);
    EXPECT_LT(r.final_residual, 1e-9);
    for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(r.field[i], static_cast<double>(i), 1e-8);
    EXPECT_EQ(harmonic_residual(g, r.field, fixed), r.final_residual);
}

TEST(Harmonic, AllFixedIsIdentity) {
    auto g = path(3);
    const std::vector<VertexId> fixed{0, 1, 2};
    auto r = harmonic_relax(g, ScalarField{5, 1, 2}, fixed, 100, 1e-12);
    EXPECT_EQ(r.field, (ScalarField{5, 1, 2}));
    EXPECT_EQ(r.iterations_run, 0u);
}

TEST(Harmonic, CycleSymmetry) {
    auto g = support::to_domain(oracle::cycle(4));
    const std::vector<VertexId> fixed{0, 2};
    auto r = harmonic_relax(g, ScalarField{0, 5, 2, -3}, fixed, 1000, 1e-12);
    EXPECT_NEAR(r.field[1], 1.0, 1e-12);
    EXPECT_NEAR(r.field[3], 1.0, 1e-12);
}

TEST(Harmonic, IterationCapAndErrors) {
    auto g = path(20);
    const std::vector<VertexId> fixed{0, 19};
    ScalarField f(20, 0.0);
    f[19] = 1.0;
    auto r = harmonic_relax(g, f, fixed, 3, 1e-15);
    EXPECT_EQ(r.iterations_run, 3u);
    auto zero = harmonic_relax(g, f, fixed, 0, 1e-15);
    EXPECT_EQ(zero.field, f);
    EXPECT_THROW(harmonic_relax(g, f, std::span<const VertexId>{}, 10, 1e-6), Error);
    EXPECT_THROW(harmonic_relax(g, f, fixed, 10, 0.0), Error);
    DomainGraph lonely(3, std::vector<Edge>{{0, 1}});
    const std::vector<VertexId> f0{0};
    EXPECT_THROW(harmonic_relax(lonely, ScalarField(3, 0.0), f0, 10, 1e-6), Error);
}

TEST(LaplacianEnergy, Examples) {
    EXPECT_EQ(laplacian_energy(path(4), ScalarField(4, 2.0)), 0.0);
    EXPECT_EQ(laplacian_energy(path(2), ScalarField{0, 2}), 4.0);
    EXPECT_EQ(laplacian_energy(path(3), ScalarField{0, 1, 3}), 5.0);
}
