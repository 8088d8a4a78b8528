#include <gtest/gtest.h>

#include "support.hpp"

using namespace gvf;

namespace {
DomainGraph path(std::size_t n) { return support::to_domain(oracle::path(n)); }

DistanceMatrix matrix3(double ab, double bc, double ac) {
    DistanceMatrix m(3);
    m(0, 1) = m(1, 0) = ab;
    m(1, 2) = m(2, 1) = bc;
    m(0, 2) = m(2, 0) = ac;
    return m;
}
}  // namespace

TEST(Lipschitz, Examples) {
    DistanceMatrix two(2);
    two(0, 1) = two(1, 0) = 2;
    auto l = lipschitz_constant(GuidingSet({{0, 0.0}, {5, 2.0}}), two);
    EXPECT_EQ(l.constant, 1.0);
    ASSERT_TRUE(l.witness);
    EXPECT_EQ(*l.witness, (std::pair<VertexId, VertexId>{0, 5}));

    DistanceMatrix one(1);
    auto single = lipschitz_constant(GuidingSet({{3, 9.0}}), one);
    EXPECT_EQ(single.constant, 0.0);
    EXPECT_FALSE(single.witness);

    auto three = lipschitz_constant(GuidingSet({{0, 0.0}, {1, 1.0}, {2, 5.0}}), matrix3(1, 1, 2));
    EXPECT_EQ(three.constant, 4.0);
    EXPECT_EQ(*three.witness, (std::pair<VertexId, VertexId>{1, 2}));
}

TEST(Mw, PathEnvelopes) {
    auto g = path(3);
    GuidingSet gs({{0, 0.0}, {2, 2.0}});
    EXPECT_EQ(mw_inf(g, gs, 1.0), (ScalarField{0, 1, 2}));
    EXPECT_EQ(mw_sup(g, gs, 1.0), (ScalarField{0, 1, 2}));
    EXPECT_EQ(mw_mid(g, gs)[1], 1.0);
    auto env = mw_envelope(g, gs);
    EXPECT_EQ(env.constant, 1.0);
}

TEST(Mw, SingleSampleConstant) {
    auto g = support::to_domain(oracle::grid(3, 3));
    GuidingSet gs({{4, 2.5}});
    auto env = mw_envelope(g, gs);
    for (std::size_t v = 0; v < 9; ++v) {
        EXPECT_EQ(env.inf[v], 2.5);
        EXPECT_EQ(env.sup[v], 2.5);
        EXPECT_EQ(env.mid[v], 2.5);
    }
}

TEST(Mw, FormulaAgainstFloydWarshall) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        auto sg = oracle::random_connected(3 + trial % 25, trial % 9, rng);
        std::vector<double> w;
        std::uniform_real_distribution<double> wd(0.5, 3.0), vd(-10, 10);
        for (std::size_t i = 0; i < sg.edges.size(); ++i) w.push_back(wd(rng));
        std::vector<Edge> e(sg.edges.begin(), sg.edges.end());
        DomainGraph g(sg.n, e, w);
        const auto fw = oracle::floyd_warshall(sg.n, sg.edges, w);
        std::vector<Sample> s{{0, vd(rng)}, {sg.n - 1, vd(rng)}};
        GuidingSet gs(s);
        const double L = 3.0 + trial % 4;
        auto inf = mw_inf(g, gs, L, Metric::weighted);
        auto sup = mw_sup(g, gs, L, Metric::weighted);
        for (std::size_t u = 0; u < sg.n; ++u) {
            double lo = oracle::kInf, hi = -oracle::kInf;
            for (auto [v, f] : s) {
                lo = std::min(lo, f + L * fw[u][v]);
                hi = std::max(hi, f - L * fw[u][v]);
            }
            EXPECT_NEAR(inf[u], lo, 1e-9 * (1 + std::abs(lo)));
            EXPECT_NEAR(sup[u], hi, 1e-9 * (1 + std::abs(hi)));
        }
    }
}

TEST(Mw, MidIsMeanOfEnvelopes) {
    auto g = support::to_domain(oracle::grid(6, 5));
    GuidingSet gs({{0, 1.0}, {13, 4.0}, {29, -2.0}});
    auto env = mw_envelope(g, gs);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        EXPECT_DOUBLE_EQ(env.mid[v], (env.inf[v] + env.sup[v]) / 2);
        EXPECT_LE(env.sup[v], env.mid[v]);
        EXPECT_LE(env.mid[v], env.inf[v]);
    }
    for (const auto& s : gs.entries()) EXPECT_EQ(env.mid[s.vertex], s.value);
}
