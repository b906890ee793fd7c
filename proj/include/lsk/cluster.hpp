#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsk/graph.hpp"

namespace lsk {

enum class ClusterMode { editing, deletion };

struct Modification {
    edge pair;
    bool add = false;

    friend bool operator==(const Modification&, const Modification&) = default;
};

struct ConflictTriple {
    vertex a = no_vertex;
    vertex center = no_vertex;
    vertex b = no_vertex;  // {a, b} is the missing pair

    friend bool operator==(const ConflictTriple&, const ConflictTriple&) = default;
};

// Ordered virtual modifications of the read-only graph. 4 words per entry.
class ModificationLog {
public:
    explicit ModificationLog(SpaceMeter* meter = nullptr) : index_(meter, 4) {}

    void apply(const Modification& mod) {
        if (index_.contains(mod.pair)) throw std::logic_error("pair modified twice");
        const std::size_t order = index_.size();
        index_[mod.pair] = Entry{mod.add, order};
    }
    [[nodiscard]] bool touches(edge pair) const { return index_.contains(pair); }
    [[nodiscard]] std::size_t size() const { return index_.size(); }

    [[nodiscard]] std::vector<Modification> ordered() const {
        std::vector<Modification> out(index_.size());
        for (const auto& [pair, e] : index_) out[e.order] = Modification{pair, e.add};
        return out;
    }
    // Pairs added by the log, in pair order.
    template <class F>
    void for_each_added(F&& f) const {
        for (const auto& [pair, e] : index_)
            if (e.add) f(pair);
    }

private:
    struct Entry {
        bool add;
        std::size_t order;
    };
    TrackedMap<edge, Entry> index_;
};

// G with a modification log applied on the fly.
class ModifiedGraph {
public:
    ModifiedGraph(const StaticGraph& g, const ModificationLog& log) : g_(&g), log_(&log) {}

    [[nodiscard]] const StaticGraph& base() const { return *g_; }

    [[nodiscard]] bool adjacent(vertex u, vertex v) const {
        if (u == v) return false;
        return g_->has_edge(u, v) != log_->touches(make_edge(u, v));
    }

    template <class F>
    void for_each_neighbor(vertex v, F&& f) const {
        for (vertex u : g_->neighbors(v))
            if (!log_->touches(make_edge(u, v))) f(u);
        log_->for_each_added([&](const edge& p) {
            if (p.first == v) f(p.second);
            if (p.second == v) f(p.first);
        });
    }

private:
    const StaticGraph* g_;
    const ModificationLog* log_;
};

// Calls f(a, center, b) once per conflict triple (a < b, {a, b} missing).
template <class F>
void for_each_conflict(const ModifiedGraph& mg, F&& f) {
    const std::size_t n = mg.base().n();
    for (vertex v = 0; v < n; ++v)
        mg.for_each_neighbor(v, [&](vertex a) {
            mg.for_each_neighbor(v, [&](vertex b) {
                if (a < b && !mg.adjacent(a, b)) f(a, v, b);
            });
        });
}

struct ConflictCounters {
    TrackedMap<edge, std::uint32_t> present;  // C
    TrackedMap<edge, std::uint32_t> missing;  // C'
    bool overflow = false;

    explicit ConflictCounters(SpaceMeter* meter) : present(meter, 3), missing(meter, 3) {}
    [[nodiscard]] std::size_t nonzero_pairs() const { return present.size() + missing.size(); }
};

// Counters over G with the log applied. Stops early, flagging overflow, once more than
// `max_pairs` distinct pairs carry a nonzero counter.
inline ConflictCounters scan_conflicts(const StaticGraph& g, const ModificationLog& log, SpaceMeter* meter = nullptr,
                                       std::size_t max_pairs = std::numeric_limits<std::size_t>::max()) {
    ConflictCounters c(meter);
    ModifiedGraph mg(g, log);
    const std::size_t n = g.n();
    for (vertex v = 0; v < n && !c.overflow; ++v)
        mg.for_each_neighbor(v, [&](vertex a) {
            mg.for_each_neighbor(v, [&](vertex b) {
                if (c.overflow || !(a < b) || mg.adjacent(a, b)) return;
                ++c.present[make_edge(a, v)];
                ++c.present[make_edge(v, b)];
                ++c.missing[make_edge(a, b)];
                if (c.nonzero_pairs() > max_pairs) c.overflow = true;
            });
        });
    return c;
}

struct ClusterStats {
    std::size_t rounds = 0;
    std::size_t nonzero_pairs = 0;
    std::size_t kernel_vertices = 0;  // before triple augmentation
    std::string reject_reason;
};

struct ClusterResult {
    Verdict verdict;
    std::vector<Modification> mods;
    std::vector<ConflictTriple> triples;
    ClusterStats stats;

    // Vertices of the kernel plus those named by forced modifications and recorded triples.
    [[nodiscard]] std::vector<vertex> full_kernel_vertices() const {
        std::vector<vertex> out = verdict.kernel.vertices();
        for (const auto& m : mods) {
            out.push_back(m.pair.first);
            out.push_back(m.pair.second);
        }
        for (const auto& t : triples) {
            out.push_back(t.a);
            out.push_back(t.center);
            out.push_back(t.b);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
};

namespace detail {

// Number of conflict triples containing the present pair {u, v}.
inline std::uint64_t present_count(const ModifiedGraph& mg, vertex u, vertex v) {
    std::uint64_t c = 0;
    mg.for_each_neighbor(u, [&](vertex w) { c += (w != v && !mg.adjacent(w, v)); });
    mg.for_each_neighbor(v, [&](vertex w) { c += (w != u && !mg.adjacent(w, u)); });
    return c;
}

// Number of conflict triples missing the absent pair {u, w}.
inline std::uint64_t missing_count(const ModifiedGraph& mg, vertex u, vertex w) {
    std::uint64_t c = 0;
    mg.for_each_neighbor(u, [&](vertex x) { c += mg.adjacent(x, w); });
    return c;
}

struct ForcedScan {
    bool found = false;
    Modification best{};
    bool forced_addition = false;
};

// Finds the lexicographically smallest pair lying in at least `threshold` conflict triples,
// recomputing each count on the fly.
inline ForcedScan find_forced(const ModifiedGraph& mg, std::uint64_t threshold) {
    ForcedScan s;
    auto consider = [&](edge p, bool add) {
        if (!s.found || p < s.best.pair) {
            s.found = true;
            s.best = Modification{p, add};
        }
        s.forced_addition = s.forced_addition || add;
    };
    const std::size_t n = mg.base().n();
    for (vertex u = 0; u < n; ++u)
        mg.for_each_neighbor(u, [&](vertex v) {
            if (u < v && present_count(mg, u, v) >= threshold) consider(edge{u, v}, false);
        });
    for_each_conflict(mg, [&](vertex a, vertex, vertex b) {
        if (missing_count(mg, a, b) >= threshold) consider(edge{a, b}, true);
    });
    return s;
}

// First `limit` triples witnessing the forced pair.
inline std::vector<ConflictTriple> witnesses(const ModifiedGraph& mg, const Modification& mod, std::size_t limit) {
    std::vector<ConflictTriple> out;
    auto [u, v] = mod.pair;
    auto push = [&](vertex a, vertex c, vertex b) {
        if (out.size() < limit) out.push_back(ConflictTriple{std::min(a, b), c, std::max(a, b)});
    };
    if (mod.add) {
        mg.for_each_neighbor(u, [&](vertex x) {
            if (mg.adjacent(x, v)) push(u, x, v);
        });
    } else {
        mg.for_each_neighbor(v, [&](vertex w) {
            if (w != u && !mg.adjacent(w, u)) push(u, v, w);
        });
        mg.for_each_neighbor(u, [&](vertex w) {
            if (w != v && !mg.adjacent(w, v)) push(v, u, w);
        });
    }
    return out;
}

}  // namespace detail

inline ClusterResult kernelize_cluster(const StaticGraph& g, int k, ClusterMode mode, SpaceMeter& meter) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    ClusterResult res;
    auto reject = [&](const char* why) {
        res.verdict = Verdict::no();
        res.mods.clear();
        res.triples.clear();
        res.stats.reject_reason = why;
        return std::move(res);
    };
    const auto kk = static_cast<std::size_t>(k);
    ModificationLog log(&meter);
    TrackedMap<std::size_t, ConflictTriple> triples(&meter, 3);
    MeterLease counters(&meter, 4);
    ModifiedGraph mg(g, log);

    while (true) {
        ++res.stats.rounds;
        detail::ForcedScan forced = detail::find_forced(mg, kk + 1);
        if (mode == ClusterMode::deletion && forced.forced_addition) return reject("forced-addition");
        if (!forced.found) break;
        if (log.size() >= kk) return reject("modification-budget");
        for (const auto& t : detail::witnesses(mg, forced.best, kk + 1)) {
            const std::size_t slot = triples.size();
            triples[slot] = t;
        }
        log.apply(forced.best);
    }

    // With nothing forced, each of the <= k' remaining solution pairs lies in <= k triples:
    // at most k'(2k+1) nonzero pairs spanning at most k'(k+2) vertices.
    const std::size_t budget = kk - log.size();
    ConflictCounters c = scan_conflicts(g, log, &meter, budget * (2 * kk + 1));
    res.stats.nonzero_pairs = c.nonzero_pairs();
    if (c.overflow) return reject("counter-overflow");

    SortedIds verts(&meter);
    for (const auto* table : {&c.present, &c.missing})
        for (const auto& [p, cnt] : *table) {
            verts.insert(p.first);
            verts.insert(p.second);
        }
    if (verts.size() > budget * (kk + 2)) return reject("kernel-size");
    KernelGraph kg(&meter);
    for (vertex v : verts) {
        kg.add_vertex(v);
        mg.for_each_neighbor(v, [&](vertex u) {
            if (u > v && verts.contains(u)) kg.add_edge(v, u);
        });
    }
    res.stats.kernel_vertices = kg.vertex_count();
    res.mods = log.ordered();
    for (const auto& [i, t] : triples) res.triples.push_back(t);
    res.verdict = Verdict::yes(std::move(kg), k - static_cast<int>(log.size()));
    return res;
}

}  // namespace lsk
