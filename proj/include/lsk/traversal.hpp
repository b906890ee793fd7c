#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>

#include "lsk/graph.hpp"

namespace lsk {

// Euler-tour walk state on a tree component: O(1) vertex ids, no visited set.
struct WalkCursor {
    vertex root = no_vertex;
    vertex current = no_vertex;
    vertex previous = no_vertex;

    friend bool operator==(const WalkCursor&, const WalkCursor&) = default;
};

inline WalkCursor walk_start(const ExclusionView& view, vertex root) {
    view.require(root);
    return {root, root, no_vertex};
}

// Moves to the neighbor of `current` cyclically after `previous` in ascending order.
// Returns nullopt (Done) when the root's successor would wrap around.
inline std::optional<WalkCursor> walk_step(const ExclusionView& view, const WalkCursor& c) {
    vertex next;
    if (c.previous == no_vertex) {
        next = view.first_neighbor(c.current);
        if (next == no_vertex) return std::nullopt;
    } else {
        next = view.next_neighbor(c.current, c.previous);
        if (next == no_vertex) {
            if (c.current == c.root) return std::nullopt;
            next = view.first_neighbor(c.current);
        }
    }
    return WalkCursor{c.root, next, c.current};
}

// Calls f(v) exactly once per vertex of the (tree) component of root: the root at the
// start, every other vertex on the arrival from its smallest view neighbor.
template <class F>
void for_each_tree_vertex(const ExclusionView& view, vertex root, F&& f, SpaceMeter* meter = nullptr) {
    MeterLease lease(meter, 3);
    WalkCursor c = walk_start(view, root);
    f(root);
    while (auto next = walk_step(view, c)) {
        c = *next;
        if (c.current != root && c.previous == view.first_neighbor(c.current)) f(c.current);
    }
}

struct BackEdgeReport {
    bool found = false;
    edge back_edge{no_vertex, no_vertex};
    std::uint64_t probes = 0;  // re-walk verifications spent
    std::uint64_t steps = 0;   // walk steps taken before stopping

    [[nodiscard]] explicit operator bool() const { return found; }
};

namespace detail {

// Replays the first `t` steps from r; reports whether w occurred and whether the move w -> u did.
inline std::pair<bool, bool> replay_seen(const ExclusionView& view, vertex r, std::uint64_t t, vertex w,
                                         vertex u) {
    bool seen = (w == r);
    bool dart = false;
    WalkCursor c = walk_start(view, r);
    for (std::uint64_t i = 0; i < t; ++i) {
        auto next = walk_step(view, c);
        if (!next) break;
        c = *next;
        if (c.current == w) seen = true;
        if (c.current == u && c.previous == w) dart = true;
    }
    return {seen, dart};
}

}  // namespace detail

// Walks the component of r with the tree-walk rule. A move u -> w is a tree move if w is
// new or w -> u was already used; otherwise {u, w} closes a cycle. Moves into r are
// checked against the edge last used to leave r instead of a replay.
inline BackEdgeReport find_back_edge(const ExclusionView& view, vertex r, SpaceMeter* meter = nullptr) {
    MeterLease lease(meter, 8);
    BackEdgeReport report;
    WalkCursor c = walk_start(view, r);
    vertex left_root_to = no_vertex;
    const std::uint64_t cap = 2 * static_cast<std::uint64_t>(view.base().n()) + 2;
    std::uint64_t t = 0;
    while (auto next = walk_step(view, c)) {
        vertex u = c.current;
        vertex w = next->current;
        if (u == r) left_root_to = w;
        bool cycle = false;
        if (w == r) {
            cycle = (u != left_root_to);
        } else if (w != c.previous) {
            ++report.probes;
            auto [seen, dart] = detail::replay_seen(view, r, t, w, u);
            cycle = seen && !dart;
        }
        ++t;
        report.steps = t;
        if (cycle) {
            report.found = true;
            report.back_edge = make_edge(u, w);
            return report;
        }
        c = *next;
        if (t > cap) throw std::logic_error("find_back_edge: walk did not terminate");
    }
    return report;
}

// Number of (tree vertex, target) adjacencies in the base graph, over the subtree hanging
// from child away from parent (the whole component when parent is no_vertex).
inline std::size_t subtree_touches(const ExclusionView& view, vertex parent, vertex child,
                                   std::span<const vertex> targets, SpaceMeter* meter = nullptr) {
    view.require(child);
    ExclusionView sub = parent == no_vertex ? view : view.without(parent);
    std::size_t count = 0;
    for_each_tree_vertex(
        sub, child,
        [&](vertex w) {
            for (vertex u : view.base().neighbors(w))
                if (std::binary_search(targets.begin(), targets.end(), u)) ++count;
        },
        meter);
    return count;
}

// Whether target lies in the subtree hanging from child away from parent.
inline bool subtree_contains(const ExclusionView& view, vertex parent, vertex child, vertex target,
                             SpaceMeter* meter = nullptr) {
    ExclusionView sub = parent == no_vertex ? view : view.without(parent);
    bool hit = false;
    for_each_tree_vertex(sub, child, [&](vertex w) { hit = hit || w == target; }, meter);
    return hit;
}

}  // namespace lsk
