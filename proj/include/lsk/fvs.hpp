#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsk/graph.hpp"
#include "lsk/reduced_view.hpp"
#include "lsk/traversal.hpp"

namespace lsk {

struct ApproxResult {
    bool no_instance = false;
    std::vector<vertex> X;
    std::size_t rounds = 0;
};

// Repeatedly reduces G - X by Basic Rules 1-2 (on demand) and grows X by a loop vertex or
// the 3k largest-degree vertices, spending one unit of k per round.
inline ApproxResult approx_fvs(const StaticGraph& g, int k, SpaceMeter& meter) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    ApproxResult res;
    SortedIds X(&meter);
    MeterLease counters(&meter, 4);
    int budget = k;
    while (true) {
        ExclusionView view(g, X.span());
        bool any = false;
        vertex loop_vertex = no_vertex;
        TrackedSet<std::pair<std::int64_t, vertex>> top(&meter, 2);
        const std::size_t take = 3 * static_cast<std::size_t>(budget);
        for (vertex v = 0; v < g.n(); ++v) {
            if (X.contains(v)) continue;
            ReducedNeighborReport r = g2_neighbors(view, v, &meter);
            if (!r.present) continue;
            any = true;
            if (r.loops > 0) {
                loop_vertex = v;
                break;
            }
            top.insert({-static_cast<std::int64_t>(r.neighbors.size()), v});
            if (top.size() > take) top.erase(*top.raw().rbegin());
        }
        if (!any) break;
        if (loop_vertex != no_vertex) {
            X.insert(loop_vertex);
        } else {
            for (const auto& [d, v] : top) X.insert(v);
        }
        ++res.rounds;
        if (--budget < 0) {
            res.no_instance = true;
            return res;
        }
    }
    res.X = X.vec();
    return res;
}

enum class TreeClass { T0, T1, T2 };

struct TreeRecord {
    vertex representative = no_vertex;
    std::vector<std::pair<vertex, std::uint32_t>> touch;  // x -> adjacencies, ascending x
    TreeClass cls = TreeClass::T0;
};

// Classifies the tree of view containing w by its contacts with X (sorted).
inline TreeRecord classify_tree(const ExclusionView& view, vertex w, std::span<const vertex> X,
                                SpaceMeter* meter = nullptr) {
    TrackedMap<vertex, std::uint32_t> S(meter, 2);
    TreeRecord rec;
    for_each_tree_vertex(
        view, w,
        [&](vertex t) {
            for (vertex u : view.base().neighbors(t))
                if (std::binary_search(X.begin(), X.end(), u)) {
                    ++S[u];
                    if (rec.representative == no_vertex || t < rec.representative) rec.representative = t;
                }
        },
        meter);
    std::uint32_t total = 0, most = 0;
    for (const auto& [x, c] : S) {
        rec.touch.emplace_back(x, c);
        total += c;
        most = std::max(most, c);
    }
    rec.cls = total <= 1 ? TreeClass::T0 : (most <= 1 ? TreeClass::T1 : TreeClass::T2);
    return rec;
}

// Every tree of G - (F u X) touched by X, reported once per (x, neighbor) contact.
inline std::vector<TreeRecord> classify_trees(const StaticGraph& g, std::span<const vertex> F, std::span<const vertex> X,
                                              SpaceMeter* meter = nullptr) {
    std::vector<vertex> excl(F.begin(), F.end());
    excl.insert(excl.end(), X.begin(), X.end());
    std::sort(excl.begin(), excl.end());
    ExclusionView view(g, excl);
    std::vector<TreeRecord> out;
    for (vertex x : X)
        view.for_each_neighbor(x, [&](vertex w) {
            if (find_back_edge(view, w, meter)) throw std::logic_error("classify_trees: view is not a forest");
            out.push_back(classify_tree(view, w, X, meter));
        });
    return out;
}

struct FvsStats {
    std::size_t approx_size = 0;
    std::size_t approx_rounds = 0;
    std::size_t restarts = 0;
    std::size_t x_size = 0;
    std::size_t f_size = 0;
    std::size_t t0_seen = 0;
    std::size_t t1_kept = 0;
    std::size_t t2_kept = 0;
    std::size_t step4_additions = 0;
    std::size_t y_size = 0;
    std::string reject_reason;
};

struct FvsResult {
    Verdict verdict;
    std::vector<vertex> X;
    std::vector<vertex> F;
    FvsStats stats;
};

namespace detail {

// The neighbor of v on the path toward root inside v's tree (no_vertex for the root).
inline vertex tree_parent(const ExclusionView& view, vertex root, vertex v, SpaceMeter* meter) {
    if (v == root) return no_vertex;
    vertex parent = no_vertex;
    view.for_each_neighbor(v, [&](vertex p) {
        if (parent == no_vertex && subtree_contains(view, v, p, root, meter)) parent = p;
    });
    return parent;
}

}  // namespace detail

inline FvsResult kernelize_fvs(const StaticGraph& g, int k, SpaceMeter& meter) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    FvsResult res;
    auto reject = [&](const char* why) {
        res.verdict = Verdict::no();
        res.stats.reject_reason = why;
        return std::move(res);
    };

    ApproxResult approx = approx_fvs(g, k, meter);
    res.stats.approx_rounds = approx.rounds;
    if (approx.no_instance) return reject("approximation");
    res.stats.approx_size = approx.X.size();

    SortedIds X(&meter), F(&meter);
    for (vertex x : approx.X) X.insert(x);
    TrackedSet<edge> Y(&meter, 2);
    MeterLease counters(&meter, 6);
    int budget = k;

    auto move_to_f = [&](vertex x) {
        X.erase(x);
        F.insert(x);
        std::vector<edge> gone;
        for (const auto& p : Y)
            if (p.first == x || p.second == x) gone.push_back(p);
        for (const auto& p : gone) Y.erase(p);
        if (--budget >= 0) ++res.stats.restarts;
    };

    while (true) {
        if (budget < 0) return reject("budget");
        const auto kk = static_cast<std::size_t>(budget);
        SortedIds excl(&meter);
        for (vertex v : X) excl.insert(v);
        for (vertex v : F) excl.insert(v);
        ExclusionView view(g, excl.span());

        // Steps 1-3: classify trees touching X; keep <= k+2 T1 trees per pair, T2 trees per x.
        TrackedSet<std::array<vertex, 3>> M1(&meter, 3);
        TrackedSet<std::pair<vertex, vertex>> M2(&meter, 2);
        vertex step3 = no_vertex;
        res.stats.t0_seen = 0;
        for (vertex xi : X) {
            view.for_each_neighbor(xi, [&](vertex w) {
                if (find_back_edge(view, w, &meter)) throw std::logic_error("kernelize_fvs: G - X is not a forest");
                TreeRecord rec = classify_tree(view, w, X.span(), &meter);
                if (rec.cls == TreeClass::T0) {
                    ++res.stats.t0_seen;
                } else if (rec.cls == TreeClass::T1) {
                    for (const auto& [x2, c] : rec.touch) {
                        if (x2 == xi) continue;
                        std::array<vertex, 3> key{std::min(xi, x2), std::max(xi, x2), rec.representative};
                        M1.insert(key);
                        auto lo = M1.raw().lower_bound({key[0], key[1], 0});
                        auto hi = M1.raw().lower_bound({key[0], key[1] + 1, 0});
                        if (static_cast<std::size_t>(std::distance(lo, hi)) > kk + 2) M1.erase(*std::prev(hi));
                    }
                } else {
                    for (const auto& [x2, c] : rec.touch)
                        if (x2 == xi && c >= 2) M2.insert({xi, rec.representative});
                }
            });
            auto lo = M2.raw().lower_bound({xi, 0});
            auto hi = M2.raw().lower_bound({xi + 1, 0});
            if (static_cast<std::size_t>(std::distance(lo, hi)) >= kk + 1) {
                step3 = xi;
                break;
            }
        }
        if (step3 != no_vertex) {
            move_to_f(step3);
            continue;
        }

        // Step 4: a tree vertex with >= k+1 child subtrees touching the same x joins X.
        std::vector<edge> additions;
        for (const auto& [x, z] : M2) {
            const std::array<vertex, 1> target{x};
            for_each_tree_vertex(
                view, z,
                [&](vertex v) {
                    vertex parent = detail::tree_parent(view, z, v, &meter);
                    std::size_t touching = 0;
                    view.for_each_neighbor(v, [&](vertex c) {
                        if (c != parent && subtree_touches(view, v, c, target, &meter) > 0) ++touching;
                    });
                    if (touching >= kk + 1) additions.emplace_back(v, x);
                },
                &meter);
        }
        if (!additions.empty()) {
            MeterLease buffered(&meter, 2 * static_cast<std::int64_t>(additions.size()));
            for (const auto& [v, x] : additions) {
                X.insert(v);
                Y.insert(make_edge(v, x));
                ++res.stats.step4_additions;
            }
            vertex heavy = no_vertex;
            for (vertex w : X) {
                std::size_t count = 0;
                for (const auto& p : Y) count += (p.first == w || p.second == w);
                if (count >= kk + 1) {
                    heavy = w;
                    break;
                }
            }
            if (heavy != no_vertex) {
                move_to_f(heavy);
                continue;
            }
            const auto y_cap = static_cast<std::int64_t>(2 * kk * kk + kk) - 1;
            if (static_cast<std::int64_t>(Y.size()) >= y_cap) return reject("step4-pairs");
            continue;
        }

        // Step 5: a tree touching x at least k(k+1) times forces x.
        vertex step5 = no_vertex;
        for (const auto& [x, z] : M2) {
            const std::array<vertex, 1> target{x};
            if (subtree_touches(view, no_vertex, z, target, &meter) >= kk * (kk + 1)) {
                step5 = x;
                break;
            }
        }
        if (step5 != no_vertex) {
            move_to_f(step5);
            continue;
        }

        // Step 6: rebuild X and the kept trees, pruning untouched subtrees and suppressing
        // degree-2 tree vertices with no neighbor in X u F.
        KernelGraph kg(&meter);
        for (vertex x : X) {
            kg.add_vertex(x);
            for (vertex u : g.neighbors(x))
                if (u > x && X.contains(u)) kg.add_edge(x, u);
        }
        TrackedSet<vertex> reps(&meter, 1);
        for (const auto& key : M1) reps.insert(key[2]);
        res.stats.t1_kept = reps.size();
        for (const auto& [x, z] : M2) reps.insert(z);
        res.stats.t2_kept = reps.size() - res.stats.t1_kept;
        for (vertex z : reps) {
            if (kg.has_vertex(z)) continue;
            for_each_tree_vertex(
                view, z,
                [&](vertex v) {
                    vertex parent = detail::tree_parent(view, z, v, &meter);
                    if (parent != no_vertex && subtree_touches(view, parent, v, X.span(), &meter) == 0) return;
                    kg.add_vertex(v);
                    if (parent != no_vertex) kg.add_edge(v, parent);
                    for (vertex u : g.neighbors(v))
                        if (X.contains(u)) kg.add_edge(v, u);
                },
                &meter);
        }
        auto adjacent_to_xf = [&](vertex v) {
            for (vertex u : g.neighbors(v))
                if (X.contains(u) || F.contains(u)) return true;
            return false;
        };
        for (vertex v : kg.vertices()) {
            if (X.contains(v) || kg.degree(v) != 2 || kg.loops(v) > 0 || adjacent_to_xf(v)) continue;
            const auto& nb = kg.neighbors(v);
            vertex a = nb.begin()->first;
            vertex b = nb.size() == 2 ? std::next(nb.begin())->first : a;
            kg.remove_vertex(v);
            kg.add_edge(a, b);
        }

        const auto n2 = static_cast<std::int64_t>(kg.vertex_count());
        const auto m2 = static_cast<std::int64_t>(kg.edge_count());
        if (n2 > 0 && m2 > n2 - 1 + static_cast<std::int64_t>(budget) * n2) return reject("density");
        res.X = X.vec();
        res.F = F.vec();
        res.stats.x_size = X.size();
        res.stats.f_size = F.size();
        res.stats.y_size = Y.size();
        res.verdict = Verdict::yes(std::move(kg), budget);
        return res;
    }
}

}  // namespace lsk
