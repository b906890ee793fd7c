#include <catch_amalgamated.hpp>

#include "lsk/fvs.hpp"
#include "lsk/oracle.hpp"
#include "support/graphs.hpp"

using namespace lsk;

namespace {

bool exact(const EdgeList& g, int k) { return oracle::exact_fvs(g, k).yes; }

bool agrees(const StaticGraph& g, int k, FvsResult* out = nullptr) {
    SpaceMeter m;
    FvsResult r = kernelize_fvs(g, k, m);
    REQUIRE(m.current() == 0);
    bool got = r.verdict.is_kernel() && exact(to_edge_list(r.verdict.kernel), r.verdict.k_prime);
    bool ok = got == exact(to_edge_list(g), k);
    if (out) *out = std::move(r);
    return ok;
}

bool acyclic_outside(const StaticGraph& g, const std::vector<vertex>& X) {
    ExclusionView view(g, X);
    for (vertex v = 0; v < g.n(); ++v)
        if (!view.excluded(v) && find_back_edge(view, v)) return false;
    return true;
}

}  // namespace

TEST_CASE("approximation on forests and triangles") {
    SpaceMeter m;
    StaticGraph forest = StaticGraph::from_edges(6, {{0, 1}, {1, 2}, {3, 4}});
    ApproxResult a = approx_fvs(forest, 0, m);
    CHECK_FALSE(a.no_instance);
    CHECK(a.X.empty());

    StaticGraph k3 = StaticGraph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    a = approx_fvs(k3, 1, m);
    CHECK_FALSE(a.no_instance);
    CHECK(a.X == std::vector<vertex>{0});

    StaticGraph two = StaticGraph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    a = approx_fvs(two, 1, m);
    CHECK(a.no_instance);
    CHECK_FALSE(exact(to_edge_list(two), 1));
    CHECK(m.current() == 0);
}

TEST_CASE("approximation picks the highest degrees, ties by smaller id") {
    // K4: no loops after reduction, every degree 3; k=1 takes 3 vertices
    StaticGraph k4 = StaticGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    SpaceMeter m;
    ApproxResult a = approx_fvs(k4, 1, m);
    REQUIRE_FALSE(a.no_instance);
    CHECK(a.X == std::vector<vertex>{0, 1, 2});
    CHECK(a.rounds == 1);
}

TEST_CASE("approximate sets are acyclic complements within 3k^2") {
    gen::Rng rng(12);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 2 + rng.below(40);
        StaticGraph g = testing::random_sparse(n, rng.below(n), rng);
        int k = static_cast<int>(rng.below(5));
        SpaceMeter m;
        ApproxResult a = approx_fvs(g, k, m);
        if (a.no_instance) {
            if (n <= 20) REQUIRE_FALSE(exact(to_edge_list(g), k));
            continue;
        }
        REQUIRE(a.X.size() <= static_cast<std::size_t>(3 * k * k));
        REQUIRE(a.rounds <= static_cast<std::size_t>(k));
        REQUIRE(acyclic_outside(g, a.X));
    }
}

TEST_CASE("trees are classified by their contacts with X") {
    // tree 0-1; x3 = 2 touches 0, x4 = 3 touches 1
    StaticGraph t1 = StaticGraph::from_edges(4, {{0, 1}, {0, 2}, {1, 3}});
    std::vector<vertex> X{2, 3};
    auto recs = classify_trees(t1, {}, X);
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].cls == TreeClass::T1);
    CHECK(recs[0].representative == 0);
    CHECK(recs[0].touch == std::vector<std::pair<vertex, std::uint32_t>>{{2, 1}, {3, 1}});

    StaticGraph t2 = StaticGraph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
    std::vector<vertex> x{2};
    recs = classify_trees(t2, {}, x);
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].cls == TreeClass::T2);

    StaticGraph t0 = StaticGraph::from_edges(2, {{0, 1}});
    std::vector<vertex> x1{1};
    recs = classify_trees(t0, {}, x1);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].cls == TreeClass::T0);

    std::vector<vertex> none;
    StaticGraph k3 = StaticGraph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
    std::vector<vertex> x3{3};
    CHECK_THROWS_AS(classify_trees(k3, none, x3), std::logic_error);
}

TEST_CASE("kernel examples") {
    FvsResult r;
    StaticGraph forest = StaticGraph::from_edges(5, {{0, 1}, {1, 2}, {3, 4}});
    CHECK(agrees(forest, 0, &r));
    REQUIRE(r.verdict.is_kernel());
    CHECK(r.verdict.kernel.vertex_count() == 0);

    StaticGraph k3 = StaticGraph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(agrees(k3, 1, &r));
    CHECK(r.verdict.is_kernel());

    std::vector<edge> k5e;
    for (vertex u = 0; u < 5; ++u)
        for (vertex v = u + 1; v < 5; ++v) k5e.emplace_back(u, v);
    StaticGraph k5 = StaticGraph::from_edges(5, k5e);
    CHECK(agrees(k5, 1, &r));
    CHECK_FALSE(exact(to_edge_list(k5), 1));

    StaticGraph c6 = StaticGraph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 3}, {1, 4}, {2, 5}});
    for (int k = 0; k <= 3; ++k) CHECK(agrees(c6, k));
}

TEST_CASE("kernel answers match the exact solver on small connected graphs") {
    for (const auto& g : testing::catalog().graphs(6, true))
        for (int k = 0; k <= 3; ++k) REQUIRE(agrees(g, k));
}

TEST_CASE("kernel answers match on random graphs that exercise steps 3 to 5") {
    gen::Rng rng(31);
    std::size_t f_moves = 0, additions = 0;
    for (int trial = 0; trial < 1500; ++trial) {
        std::size_t n = 3 + rng.below(12);
        StaticGraph g = testing::random_sparse(n, rng.below(2 * n), rng);
        int k = static_cast<int>(rng.below(5));
        FvsResult r;
        REQUIRE(agrees(g, k, &r));
        REQUIRE(r.stats.restarts <= static_cast<std::size_t>(k));
        REQUIRE(r.F.size() <= static_cast<std::size_t>(k));
        if (r.verdict.is_kernel()) {
            auto n2 = static_cast<long long>(r.verdict.kernel.vertex_count());
            auto m2 = static_cast<long long>(r.verdict.kernel.edge_count());
            REQUIRE((n2 == 0 || m2 <= n2 - 1 + r.verdict.k_prime * n2));
            REQUIRE(r.verdict.k_prime == k - static_cast<int>(r.F.size()));
        }
        f_moves += r.F.size();
        additions += r.stats.step4_additions;
    }
    CHECK(f_moves > 0);
    CHECK(additions > 0);
}

TEST_CASE("a forced vertex with many private cycles goes to F") {
    // vertex 0 with four triangles 0-a-b hanging off it; k=3 forces 0 into every solution
    std::vector<edge> es;
    for (vertex t = 0; t < 4; ++t) {
        vertex a = 1 + 2 * t, b = 2 + 2 * t;
        es.insert(es.end(), {{0, a}, {0, b}, {a, b}});
    }
    StaticGraph g = StaticGraph::from_edges(9, es);
    FvsResult r;
    CHECK(agrees(g, 3, &r));
    REQUIRE(r.verdict.is_kernel());
    CHECK(r.F == std::vector<vertex>{0});
    CHECK(r.verdict.k_prime == 2);
}

TEST_CASE("kernel multigraph loops are forced by the oracle") {
    EdgeList loop{1, {{0, 0}}};
    CHECK_FALSE(exact(loop, 0));
    CHECK(exact(loop, 1));
    EdgeList doubled{2, {{0, 1}, {0, 1}}};
    CHECK_FALSE(exact(doubled, 0));
}
