#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "lsk/graph.hpp"

// Instance families for benchmarks and the CLI `gen` subcommand.
// All randomness comes from std::mt19937_64 seeded with the given seed; only raw
// engine output is consumed (no std distributions) so corpora reproduce across
// standard libraries.
namespace lsk::gen {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    // Uniform in [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("empty range");
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t x;
        do x = eng_();
        while (x >= limit);
        return x % bound;
    }

private:
    std::mt19937_64 eng_;
};

// Cycle 0-1-...-(n-1)-0 plus c distinct random chords.
inline StaticGraph cycle_with_chords(std::size_t n, std::size_t c, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    const std::size_t room = n * (n - 1) / 2 - n;
    if (c > room) throw std::invalid_argument("too many chords");
    Rng rng(seed);
    std::set<edge> es;
    for (vertex v = 0; v < n; ++v) es.insert(make_edge(v, static_cast<vertex>((v + 1) % n)));
    while (es.size() < n + c) {
        auto u = static_cast<vertex>(rng.below(n)), v = static_cast<vertex>(rng.below(n));
        if (u != v) es.insert(make_edge(u, v));
    }
    return StaticGraph::from_edges(n, {es.begin(), es.end()});
}

// Random recursive tree (parent of v uniform in [0, v)) plus f distinct extra edges.
inline StaticGraph tree_with_feedback(std::size_t n, std::size_t f, std::uint64_t seed) {
    if (n == 0) return StaticGraph::from_edges(0, {});
    if (f > n * (n - 1) / 2 - (n - 1)) throw std::invalid_argument("too many feedback edges");
    Rng rng(seed);
    std::set<edge> es;
    for (vertex v = 1; v < n; ++v) es.insert(make_edge(v, static_cast<vertex>(rng.below(v))));
    while (es.size() < n - 1 + f) {
        auto u = static_cast<vertex>(rng.below(n)), v = static_cast<vertex>(rng.below(n));
        if (u != v) es.insert(make_edge(u, v));
    }
    return StaticGraph::from_edges(n, {es.begin(), es.end()});
}

// Disjoint cliques of size `clique` (the last may be smaller), then p planted conflicts: each
// toggles one random vertex pair (an inter-clique edge or a deleted intra-clique edge).
inline StaticGraph cluster_with_conflicts(std::size_t n, std::size_t clique, std::size_t p, std::uint64_t seed) {
    if (clique == 0) throw std::invalid_argument("clique size must be positive");
    Rng rng(seed);
    std::set<edge> es;
    for (std::size_t start = 0; start < n; start += clique)
        for (std::size_t u = start; u < std::min(n, start + clique); ++u)
            for (std::size_t v = u + 1; v < std::min(n, start + clique); ++v)
                es.insert(make_edge(static_cast<vertex>(u), static_cast<vertex>(v)));
    std::set<edge> toggled;
    if (p > n * (n - 1) / 2) throw std::invalid_argument("too many conflicts");
    while (toggled.size() < p) {
        auto u = static_cast<vertex>(rng.below(n)), v = static_cast<vertex>(rng.below(n));
        if (u == v) continue;
        edge e = make_edge(u, v);
        if (!toggled.insert(e).second) continue;
        if (!es.erase(e)) es.insert(e);
    }
    return StaticGraph::from_edges(n, {es.begin(), es.end()});
}

// G(n, p) with p = num/den.
inline StaticGraph random_graph(std::size_t n, std::uint64_t num, std::uint64_t den, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<edge> es;
    for (vertex u = 0; u < n; ++u)
        for (vertex v = u + 1; v < n; ++v)
            if (rng.below(den) < num) es.emplace_back(u, v);
    return StaticGraph::from_edges(n, std::move(es));
}

}  // namespace lsk::gen
