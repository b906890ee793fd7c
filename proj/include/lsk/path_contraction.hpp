#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsk/graph.hpp"

namespace lsk {

// BFS queue entry: vertex, predecessor, position on a degree-2 chain, and the
// (k+1)-th chain vertex once the chain got that long.
struct Quadruple {
    vertex v = no_vertex;
    vertex p = no_vertex;
    std::uint32_t i = 0;
    vertex star = no_vertex;
};

// A shortened degree-2 chain: its terminators in G and the kernel edge that bridges the gap.
struct ChainRecord {
    vertex end_a = no_vertex;
    vertex end_b = no_vertex;
    vertex w = no_vertex;
    vertex w2 = no_vertex;

    friend bool operator==(const ChainRecord&, const ChainRecord&) = default;
};

struct PcStats {
    std::size_t visited = 0;
    std::size_t bfs_leaves = 0;
    std::size_t max_layer = 0;
    std::size_t merges = 0;
    std::string reject_reason;
};

struct PcResult {
    Verdict verdict;
    std::vector<ChainRecord> chains;
    PcStats stats;
};

struct MergeOutcome {
    vertex w = no_vertex;
    vertex w2 = no_vertex;
    std::size_t removed = 0;
    bool shortened = false;
};

namespace detail {

// One step from chain vertex `cur` back toward its predecessor `back`.
inline void step_back(const StaticGraph& g, vertex& cur, vertex& back) {
    auto nb = g.neighbors(back);
    vertex further = nb.size() == 2 ? (nb[0] == cur ? nb[1] : nb[0]) : no_vertex;
    cur = back;
    back = further;
}

// First vertex of degree != 2 reached from chain vertex `cur` moving away from `from`.
inline vertex chain_terminator(const StaticGraph& g, vertex cur, vertex from) {
    for (std::size_t guard = 0; g.degree(cur) == 2 && guard <= g.n(); ++guard) {
        auto nb = g.neighbors(cur);
        vertex next = nb[0] == from ? nb[1] : nb[0];
        from = cur;
        cur = next;
    }
    return cur;
}

}  // namespace detail

// Two degree-2 fronts of one chain met (q.v adjacent to q2.v). If i + i' > k + 2, walk back
// on both sides (larger position first, ties on q's side) removing kernel vertices until
// i + i' = k + 2, then bridge the stop vertices.
inline MergeOutcome merge_fronts(const StaticGraph& g, const Quadruple& q, const Quadruple& q2, KernelGraph& kg,
                                 int k) {
    if (!g.has_edge(q.v, q2.v)) throw std::invalid_argument("merge_fronts: fronts are not adjacent");
    if (g.degree(q.v) != 2 || g.degree(q2.v) != 2)
        throw std::invalid_argument("merge_fronts: fronts must have degree 2");
    const std::uint32_t keep = static_cast<std::uint32_t>(k) + 1;
    const std::uint32_t target = static_cast<std::uint32_t>(k) + 2;
    MergeOutcome out;
    vertex a = q.v, a_back = q.p, b = q2.v, b_back = q2.p;
    std::uint32_t i = q.i, j = q2.i;
    while (i + j > target) {
        out.shortened = true;
        if (i >= j) {
            if (i <= keep && kg.has_vertex(a)) {
                kg.remove_vertex(a);
                ++out.removed;
            }
            detail::step_back(g, a, a_back);
            --i;
        } else {
            if (j <= keep && kg.has_vertex(b)) {
                kg.remove_vertex(b);
                ++out.removed;
            }
            detail::step_back(g, b, b_back);
            --j;
        }
    }
    if (!kg.has_edge(a, b)) kg.add_edge(a, b);
    out.w = a;
    out.w2 = b;
    return out;
}

inline PcResult kernelize_path_contraction(const StaticGraph& g, int k, SpaceMeter& meter) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    PcResult res;
    auto reject = [&](const char* why) {
        res.verdict = Verdict::no();
        res.chains.clear();
        res.stats.reject_reason = why;
        return std::move(res);
    };
    const std::size_t n = g.n();
    const std::size_t m = g.m();
    const auto kk = static_cast<std::size_t>(k);
    const std::size_t keep = kk + 1;
    if (n == 0) {
        res.verdict = Verdict::yes(KernelGraph{}, k);
        return res;
    }
    if (2 * m > 2 * (n - 1) + kk * kk + 5 * kk + 4) return reject("edge-count");

    vertex start = no_vertex;
    for (vertex v = 0; v < n && start == no_vertex; ++v)
        if (g.degree(v) != 2) start = v;

    if (start == no_vertex) {
        // Disjoint cycles: a single cycle of length <= k+2 is its own kernel.
        MeterLease lease(&meter, 3);
        std::size_t len = 1;
        vertex prev = 0, cur = g.neighbors(0)[0];
        while (cur != 0) {
            auto nb = g.neighbors(cur);
            vertex next = nb[0] == prev ? nb[1] : nb[0];
            prev = cur;
            cur = next;
            ++len;
        }
        if (len != n) return reject("disconnected");
        if (m > kk + 2) return reject("cycle-length");
        KernelGraph kg(&meter);
        for (const auto& [u, v] : g.edges()) kg.add_edge(u, v);
        res.stats.visited = n;
        res.verdict = Verdict::yes(std::move(kg), k);
        return res;
    }

    KernelGraph kg(&meter);
    std::array<TrackedMap<vertex, Quadruple>, 3> layers{TrackedMap<vertex, Quadruple>(&meter, 5),
                                                        TrackedMap<vertex, Quadruple>(&meter, 5),
                                                        TrackedMap<vertex, Quadruple>(&meter, 5)};
    TrackedMap<int, ChainRecord> chains(&meter, 4);
    MeterLease counters(&meter, 4);  // visited, leaves, layer index, scratch
    std::size_t prev_i = 0, cur_i = 1, next_i = 2;
    layers[cur_i][start] = Quadruple{start, no_vertex, 0, no_vertex};
    std::size_t visited = 0, leaves = 0;

    auto record = [&](vertex a, vertex b, vertex w, vertex w2) {
        const int slot = static_cast<int>(chains.size());
        chains[slot] = ChainRecord{std::min(a, b), std::max(a, b), w, w2};
    };
    auto lookup = [&](vertex u, const Quadruple*& q, bool& processed, vertex current) {
        if ((q = layers[prev_i].find(u))) {
            processed = true;
            return true;
        }
        if ((q = layers[cur_i].find(u))) {
            processed = u < current;
            return true;
        }
        if ((q = layers[next_i].find(u))) {
            processed = false;
            return true;
        }
        return false;
    };
    // Shortened single-direction chain ending at hub h: bridge {star, h}.
    auto bridge_to_hub = [&](vertex star, vertex h) {
        if (g.has_edge(star, h)) {
            if (!kg.has_edge(star, h)) kg.add_edge(star, h);
            return;
        }
        if (!kg.has_edge(star, h)) kg.add_edge(star, h);
        auto nb = g.neighbors(star);
        record(detail::chain_terminator(g, nb[0], star), detail::chain_terminator(g, nb[1], star), star, h);
    };

    while (!layers[cur_i].empty()) {
        res.stats.max_layer = std::max(res.stats.max_layer, layers[cur_i].size());
        for (const auto& [v, q] : layers[cur_i]) {
            ++visited;
            const std::size_t deg = g.degree(v);
            const bool in_kernel = deg != 2 || q.i <= keep;
            if (in_kernel) {
                kg.add_vertex(v);
                if (q.p != no_vertex) {
                    if (q.i <= keep) {
                        if (!kg.has_edge(v, q.p)) kg.add_edge(v, q.p);
                    } else {
                        bridge_to_hub(q.star, v);
                    }
                }
                for (vertex u : g.neighbors(v))
                    if (kg.has_vertex(u) && !kg.has_edge(v, u)) kg.add_edge(v, u);
            }
            std::size_t children = 0;
            for (vertex u : g.neighbors(v)) {
                if (u == q.p) continue;
                const Quadruple* qu = nullptr;
                bool processed = false;
                if (lookup(u, qu, processed, v)) {
                    if (!processed) continue;
                    const bool v2 = deg == 2, u2 = g.degree(u) == 2;
                    if (v2 && u2) {
                        Quadruple mine = q, theirs = *qu;
                        MergeOutcome mo = merge_fronts(g, mine, theirs, kg, k);
                        if (mo.shortened) {
                            ++res.stats.merges;
                            record(detail::chain_terminator(g, q.p, v), detail::chain_terminator(g, qu->p, u),
                                   mo.w, mo.w2);
                        }
                    } else if (v2 && q.i > keep) {
                        bridge_to_hub(q.star, u);
                    } else if (u2 && qu->i > keep) {
                        bridge_to_hub(qu->star, v);
                    }
                    continue;
                }
                Quadruple child;
                child.v = u;
                child.p = v;
                if (deg != 2) {
                    child.i = 1;
                } else {
                    child.i = q.i + 1;
                    child.star = q.i == keep ? v : q.star;
                }
                layers[next_i][u] = child;
                ++children;
                if (layers[next_i].size() > kk + 2) return reject("frontier");
            }
            const bool is_root = q.p == no_vertex;
            if ((!is_root && children == 0) || (is_root && children == 1)) ++leaves;
            if (leaves > kk + 2) return reject("bfs-leaves");
        }
        layers[prev_i].clear();
        std::size_t old_prev = prev_i;
        prev_i = cur_i;
        cur_i = next_i;
        next_i = old_prev;
    }
    res.stats.visited = visited;
    res.stats.bfs_leaves = leaves;
    if (visited < n) return reject("disconnected");
    for (const auto& [idx, rec] : chains) res.chains.push_back(rec);
    res.verdict = Verdict::yes(std::move(kg), k);
    return res;
}

}  // namespace lsk
