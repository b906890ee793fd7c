#pragma once

#include <algorithm>
#include <vector>

#include "lsk/graph.hpp"
#include "lsk/traversal.hpp"

namespace lsk {

// One vertex of the graph obtained from the view by exhausting Basic Rules 1 and 2.
struct ReducedNeighborReport {
    vertex v = no_vertex;
    bool present = false;        // present in the fully reduced graph
    std::size_t deg_g1 = 0;      // |Q_v|
    std::vector<vertex> neighbors;  // far chain endpoints; a loop at v appears twice
    std::size_t loops = 0;
};

// Whether the neighbor u of v survives Basic Rule 1: the side of u in view - v holds a
// cycle or reaches back to another neighbor of v.
inline bool survives_br1(const ExclusionView& view, vertex v, vertex u, SpaceMeter* meter = nullptr) {
    ExclusionView side = view.without(v);
    if (find_back_edge(side, u, meter)) return true;
    bool other_side = false;
    for_each_tree_vertex(
        side, u, [&](vertex w) { other_side = other_side || (w != u && view.base().has_edge(w, v)); },
        meter);
    return other_side;
}

// |Q_v|, counting stops once it reaches `cap`.
inline std::size_t g1_degree(const ExclusionView& view, vertex v, std::size_t cap = no_vertex,
                             SpaceMeter* meter = nullptr) {
    std::size_t d = 0;
    for (vertex u : view.base().neighbors(v)) {
        if (d >= cap) break;
        if (!view.excluded(u) && survives_br1(view, v, u, meter)) ++d;
    }
    return d;
}

inline std::vector<vertex> br1_survivor_neighbors(const ExclusionView& view, vertex v,
                                                  SpaceMeter* meter = nullptr) {
    view.require(v);
    std::vector<vertex> q;
    view.for_each_neighbor(v, [&](vertex u) {
        if (survives_br1(view, v, u, meter)) q.push_back(u);
    });
    return q;
}

namespace detail {

// The Q-neighbor of a G1-degree-2 vertex other than `prev`.
inline vertex chain_next(const ExclusionView& view, vertex cur, vertex prev, SpaceMeter* meter) {
    for (vertex u : view.base().neighbors(cur))
        if (u != prev && !view.excluded(u) && survives_br1(view, cur, u, meter)) return u;
    return no_vertex;
}

}  // namespace detail

inline ReducedNeighborReport g2_neighbors(const ExclusionView& view, vertex v, SpaceMeter* meter = nullptr) {
    view.require(v);
    MeterLease lease(meter, 6);
    ReducedNeighborReport r;
    r.v = v;
    r.deg_g1 = g1_degree(view, v, no_vertex, meter);
    if (r.deg_g1 <= 1) return r;

    const std::size_t guard = view.base().n() + 1;
    if (r.deg_g1 == 2) {
        // Present only as the smallest id of a cycle whose G1 vertices all have degree 2.
        vertex prev = v;
        vertex cur = detail::chain_next(view, v, no_vertex, meter);
        vertex smallest = v;
        for (std::size_t steps = 0; cur != v; ++steps) {
            if (steps > guard || g1_degree(view, cur, 3, meter) != 2) return r;
            smallest = std::min(smallest, cur);
            vertex next = detail::chain_next(view, cur, prev, meter);
            prev = cur;
            cur = next;
        }
        if (smallest != v) return r;
        r.present = true;
        r.neighbors = {v, v};
        r.loops = 1;
        return r;
    }

    r.present = true;
    for (vertex u : view.base().neighbors(v)) {
        if (view.excluded(u) || !survives_br1(view, v, u, meter)) continue;
        vertex prev = v;
        vertex cur = u;
        for (std::size_t steps = 0; cur != v && g1_degree(view, cur, 3, meter) == 2; ++steps) {
            if (steps > guard) throw std::logic_error("g2_neighbors: chain did not end");
            vertex next = detail::chain_next(view, cur, prev, meter);
            prev = cur;
            cur = next;
        }
        r.neighbors.push_back(cur);
    }
    r.loops = static_cast<std::size_t>(std::count(r.neighbors.begin(), r.neighbors.end(), v)) / 2;
    return r;
}

// Materializes the fully reduced multigraph by querying every vertex of the view.
inline KernelGraph reduced_graph(const ExclusionView& view, SpaceMeter* meter = nullptr) {
    KernelGraph g(meter);
    for (vertex v = 0; v < view.base().n(); ++v) {
        if (view.excluded(v)) continue;
        ReducedNeighborReport r = g2_neighbors(view, v, meter);
        if (!r.present) continue;
        g.add_vertex(v);
        for (vertex w : r.neighbors)
            if (w > v) g.add_edge(v, w);
        if (r.loops) g.add_edge(v, v, static_cast<std::uint32_t>(r.loops));
    }
    return g;
}

}  // namespace lsk
