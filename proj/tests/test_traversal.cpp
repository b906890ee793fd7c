#include <catch_amalgamated.hpp>

#include "lsk/traversal.hpp"
#include "support/graphs.hpp"

using namespace lsk;

namespace {

std::vector<vertex> walk_order(const ExclusionView& view, vertex root, std::size_t* steps = nullptr) {
    std::vector<vertex> order{root};
    WalkCursor c = walk_start(view, root);
    std::size_t s = 0;
    while (auto next = walk_step(view, c)) {
        c = *next;
        order.push_back(c.current);
        ++s;
    }
    if (steps) *steps = s;
    return order;
}

}  // namespace

TEST_CASE("walk follows the ascending cyclic successor rule") {
    std::size_t steps = 0;
    StaticGraph star = StaticGraph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(walk_order(ExclusionView(star), 0, &steps) == std::vector<vertex>{0, 1, 0, 2, 0, 3, 0});
    CHECK(steps == 6);

    StaticGraph path = StaticGraph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(walk_order(ExclusionView(path), 1, &steps) == std::vector<vertex>{1, 0, 1, 2, 1});
    CHECK(steps == 4);

    StaticGraph single = StaticGraph::from_edges(1, {});
    CHECK(walk_order(ExclusionView(single), 0, &steps) == std::vector<vertex>{0});
    CHECK(steps == 0);
}

TEST_CASE("walk rejects an excluded root") {
    StaticGraph path = StaticGraph::from_edges(3, {{0, 1}, {1, 2}});
    std::vector<vertex> ex{1};
    CHECK_THROWS_AS(walk_start(ExclusionView(path, ex), 1), std::invalid_argument);
    CHECK_THROWS_AS(find_back_edge(ExclusionView(path, ex), 1), std::invalid_argument);
}

TEST_CASE("walk covers random trees in exactly 2(n-1) steps, counting each vertex once") {
    gen::Rng rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 1 + rng.below(150);
        StaticGraph t = testing::random_tree(n, rng);
        auto root = static_cast<vertex>(rng.below(n));
        std::size_t steps = 0;
        auto order = walk_order(ExclusionView(t), root, &steps);
        REQUIRE(steps == 2 * (n - 1));
        std::vector<vertex> once;
        for_each_tree_vertex(ExclusionView(t), root, [&](vertex v) { once.push_back(v); });
        std::sort(once.begin(), once.end());
        REQUIRE(once == testing::marked_reach(t, root));
    }
}

TEST_CASE("walk stays inside the view") {
    // tree 0-1-2-3 with 2 excluded: the component of 0 is {0, 1}
    StaticGraph t = StaticGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    std::vector<vertex> ex{2};
    CHECK(walk_order(ExclusionView(t, ex), 0) == std::vector<vertex>{0, 1, 0});
}

TEST_CASE("find_back_edge on trees and small cyclic graphs") {
    StaticGraph tree = StaticGraph::from_edges(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
    CHECK_FALSE(find_back_edge(ExclusionView(tree), 2).found);

    StaticGraph k3 = StaticGraph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    BackEdgeReport r = find_back_edge(ExclusionView(k3), 0);
    REQUIRE(r.found);
    CHECK(k3.has_edge(r.back_edge.first, r.back_edge.second));

    // path 0-1-2-3 plus chord {1,3}: the only cycle is 1-2-3
    StaticGraph chord = StaticGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}});
    r = find_back_edge(ExclusionView(chord), 0);
    REQUIRE(r.found);
    std::vector<edge> cycle_edges{{1, 2}, {2, 3}, {1, 3}};
    CHECK(std::find(cycle_edges.begin(), cycle_edges.end(), r.back_edge) != cycle_edges.end());
    CHECK(r.probes <= r.steps);
}

TEST_CASE("find_back_edge agrees with a marked search and reports a cycle edge") {
    gen::Rng rng(8);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 1 + rng.below(60);
        StaticGraph g = testing::random_sparse(n, rng.below(4), rng);
        std::vector<vertex> ex;
        for (vertex v = 0; v < n; ++v)
            if (rng.below(10) == 0) ex.push_back(v);
        auto root = static_cast<vertex>(rng.below(n));
        if (std::binary_search(ex.begin(), ex.end(), root)) continue;
        BackEdgeReport r = find_back_edge(ExclusionView(g, ex), root);
        REQUIRE(r.found == !testing::component_is_tree(g, root, ex));
        if (r.found) {
            auto [u, v] = r.back_edge;
            std::vector<edge> rest;
            for (const auto& e : g.edges())
                if (e != r.back_edge) rest.push_back(e);
            auto reach = testing::marked_reach(StaticGraph::from_edges(n, rest), u, ex);
            REQUIRE(std::binary_search(reach.begin(), reach.end(), v));
        }
    }
}

TEST_CASE("subtree_touches counts base-graph adjacencies into the targets") {
    StaticGraph g = StaticGraph::from_edges(10, {{0, 1}, {1, 2}, {2, 9}});
    std::vector<vertex> ex{9};
    ExclusionView view(g, ex);
    std::vector<vertex> nine{9};
    CHECK(subtree_touches(view, 0, 1, nine) == 1);
    CHECK(subtree_touches(view, 0, 1, std::vector<vertex>{}) == 0);
    CHECK(subtree_touches(view, 1, 0, nine) == 0);

    StaticGraph spider =
        StaticGraph::from_edges(10, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}, {2, 9}, {4, 9}});
    ExclusionView sv(spider, ex);
    CHECK(subtree_touches(sv, no_vertex, 0, nine) == 2);
    CHECK(subtree_touches(sv, 0, 3, nine) == 1);
    CHECK(subtree_contains(sv, 0, 5, 6));
    CHECK_FALSE(subtree_contains(sv, 0, 5, 2));
}

TEST_CASE("traversal uses a constant number of metered words") {
    for (std::size_t n : {100u, 500u, 2000u}) {
        StaticGraph g = gen::tree_with_feedback(n, 0, 1);
        SpaceMeter m;
        for_each_tree_vertex(ExclusionView(g), 0, [](vertex) {}, &m);
        CHECK(m.peak() == 3);
        SpaceMeter m2;
        CHECK_FALSE(find_back_edge(ExclusionView(g), 0, &m2).found);
        CHECK(m2.peak() == 8);
    }
}
