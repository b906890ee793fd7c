#include <catch_amalgamated.hpp>

#include <sstream>

#include "lsk/io.hpp"
#include "lsk/path_contraction.hpp"
#include "support/graphs.hpp"

using namespace lsk;

TEST_CASE("loader reads the edge-list format") {
    SECTION("triangle") {
        StaticGraph g = load_graph_text("p 3 3\ne 0 1\ne 1 2\ne 2 0\n");
        CHECK(g.n() == 3);
        CHECK(g.m() == 3);
        CHECK(g.has_edge(2, 0));
    }
    SECTION("isolated vertices") {
        StaticGraph g = load_graph_text("p 2 0\n");
        CHECK(g.n() == 2);
        CHECK(g.m() == 0);
    }
    SECTION("duplicate edge is dropped with a warning") {
        std::vector<std::string> warnings;
        StaticGraph g = load_graph_text("p 3 2\ne 0 1\ne 1 0\n", &warnings);
        CHECK(g.m() == 1);
        REQUIRE(warnings.size() == 1);
        CHECK(warnings[0].find("duplicate") != std::string::npos);
    }
    SECTION("comments and blank lines") {
        StaticGraph g = load_graph_text("# header follows\n\np 2 1 # two vertices\ne 0 1\n");
        CHECK(g.m() == 1);
    }
}

TEST_CASE("loader rejects malformed input") {
    CHECK_THROWS_AS(load_graph_text("p 3 1\ne 0 3\n"), FormatError);
    CHECK_THROWS_AS(load_graph_text("p 3 1\ne 1 1\n"), FormatError);
    CHECK_THROWS_AS(load_graph_text("p 3 1\nx 0 1\n"), FormatError);
    CHECK_THROWS_AS(load_graph_text("p 3 1\ne 0\n"), FormatError);
    CHECK_THROWS_AS(load_graph_text("p 3 1\ne 0 1 2\n"), FormatError);
    CHECK_THROWS_AS(load_graph_text("e 0 1\n"), FormatError);
    CHECK_THROWS_AS(load_graph_text("p 3 2\ne 0 1\n"), FormatError);
    CHECK_THROWS_AS(load_graph_text("p 3 1\np 3 1\ne 0 1\n"), FormatError);
    CHECK_THROWS_AS(load_graph_text("p 2 1\nl 0\n"), FormatError);
    CHECK_THROWS_AS(load_graph_text(""), FormatError);
}

TEST_CASE("adjacency is sorted and symmetric") {
    StaticGraph g = StaticGraph::from_edges(5, {{4, 0}, {2, 0}, {3, 1}, {0, 1}});
    auto nb = g.neighbors(0);
    CHECK(std::vector<vertex>(nb.begin(), nb.end()) == std::vector<vertex>{1, 2, 4});
    for (vertex v = 0; v < g.n(); ++v)
        for (vertex u : g.neighbors(v)) CHECK(g.has_edge(u, v));
    CHECK_THROWS_AS(StaticGraph::from_edges(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(StaticGraph::from_edges(2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("view_neighbors skips excluded vertices") {
    StaticGraph k3 = StaticGraph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    std::vector<vertex> ex2{2};
    CHECK(view_neighbors(ExclusionView(k3, ex2), 0) == std::vector<vertex>{1});
    CHECK(view_neighbors(ExclusionView(k3), 0) == std::vector<vertex>{1, 2});
    StaticGraph p4 = StaticGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    std::vector<vertex> ex1{1};
    CHECK(view_neighbors(ExclusionView(p4, ex1), 2) == std::vector<vertex>{3});
    CHECK_THROWS_AS(view_neighbors(ExclusionView(p4, ex1), 1), std::invalid_argument);
}

TEST_CASE("view degree sum equals twice the induced edge count") {
    gen::Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng.below(100);
        StaticGraph g = testing::random_sparse(n, rng.below(2 * n), rng);
        std::vector<vertex> ex;
        for (vertex v = 0; v < n; ++v)
            if (rng.below(5) == 0) ex.push_back(v);
        ExclusionView view(g, ex);
        std::size_t sum = 0;
        for (vertex v = 0; v < n; ++v)
            if (!view.excluded(v)) sum += view_neighbors(view, v).size();
        std::size_t induced = 0;
        for (const auto& [u, v] : g.edges()) induced += !view.excluded(u) && !view.excluded(v);
        REQUIRE(sum == 2 * induced);
    }
}

TEST_CASE("meter tracks current and peak") {
    SpaceMeter m;
    m.charge(5);
    CHECK((m.current() == 5 && m.peak() == 5));
    m.charge(-3);
    CHECK((m.current() == 2 && m.peak() == 5));
    m.charge(10);
    CHECK((m.current() == 12 && m.peak() == 12));
    CHECK_THROWS_AS(m.charge(-13), std::logic_error);
}

TEST_CASE("tracked containers charge and refund") {
    SpaceMeter m;
    {
        TrackedMap<vertex, int> map(&m, 3);
        map[1] = 4;
        map[2] = 5;
        map[1] = 6;
        CHECK(m.current() == 6);
        TrackedSet<vertex> set(&m);
        set.insert(7);
        set.insert(7);
        CHECK(m.current() == 7);
        SortedIds ids(&m);
        ids.insert(3);
        ids.insert(1);
        CHECK(m.current() == 9);
        CHECK(ids.vec() == std::vector<vertex>{1, 3});
    }
    CHECK(m.current() == 0);
    CHECK(m.peak() == 9);
}

TEST_CASE("kernel multigraph counts loops and multiplicities") {
    SpaceMeter m;
    KernelGraph g(&m);
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    g.add_edge(2, 2);
    g.add_vertex(5);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.multiplicity(1, 0) == 2);
    CHECK(g.degree(0) == 2);
    CHECK(g.degree(2) == 2);
    CHECK(g.loops(2) == 1);
    CHECK(m.current() == g.words());
    g.remove_vertex(0);
    CHECK(g.edge_count() == 1);
    CHECK(g.degree(1) == 0);
    CHECK(m.current() == g.words());
    g.detach();
    CHECK(m.current() == 0);
}

TEST_CASE("kernel file round trip preserves the labeled multigraph") {
    gen::Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        KernelGraph g;
        std::size_t n = 1 + rng.below(12);
        for (std::size_t i = 0; i < n; ++i) g.add_vertex(static_cast<vertex>(3 * i));
        for (int e = 0; e < 15; ++e) {
            auto u = static_cast<vertex>(3 * rng.below(n)), v = static_cast<vertex>(3 * rng.below(n));
            g.add_edge(u, v);
        }
        std::stringstream ss;
        write_kernel(ss, g);
        KernelGraph back = load_kernel(ss);
        EdgeList a = to_edge_list(g), b = to_edge_list(back);
        REQUIRE(a.n == b.n);
        REQUIRE(a.edges == b.edges);
    }
}

TEST_CASE("meter peak is deterministic across reruns") {
    StaticGraph g = gen::cycle_with_chords(300, 2, 17);
    SpaceMeter a, b;
    kernelize_path_contraction(g, 2, a);
    kernelize_path_contraction(g, 2, b);
    CHECK(a.peak() == b.peak());
    CHECK(a.current() == 0);
}
