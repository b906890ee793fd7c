#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsk/graph.hpp"

// Brute-force exact solvers. Deliberately naive and independent of the kernelization code.
namespace lsk::oracle {

struct CapExceeded : std::length_error {
    using std::length_error::length_error;
};

enum class ClusterMode { editing, deletion };

struct SolutionSet {
    bool yes = false;
    std::vector<std::vector<edge>> edge_solutions;      // path contraction, cluster modes
    std::vector<std::vector<vertex>> vertex_solutions;  // feedback vertex set
};

namespace detail {

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

// Calls visit(chosen) for every subset of {0..m-1} of size 0..k, by increasing size and
// lexicographically within a size.
inline void for_each_subset(std::size_t m, int k, const std::function<void(const std::vector<std::size_t>&)>& visit) {
    std::vector<std::size_t> idx;
    for (std::size_t size = 0; size <= static_cast<std::size_t>(std::max(k, 0)) && size <= m; ++size) {
        idx.resize(size);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            visit(idx);
            std::size_t pos = size;
            while (pos > 0 && idx[pos - 1] == m - size + pos - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t j = pos; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
}

template <class T>
bool includes_sorted(const std::vector<T>& big, const std::vector<T>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace detail

// Contracts `chosen` edges, then drops loops and parallel edges; tests for a path.
inline bool contracts_to_path(const EdgeList& g, const std::vector<edge>& chosen) {
    if (g.n == 0) return true;
    detail::DisjointSets ds(g.n);
    for (const auto& [u, v] : chosen) ds.unite(u, v);
    std::vector<std::size_t> cls(g.n);
    std::vector<std::size_t> reps;
    for (std::size_t v = 0; v < g.n; ++v) {
        cls[v] = ds.find(v);
        reps.push_back(cls[v]);
    }
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    auto rank = [&](std::size_t c) { return static_cast<std::size_t>(std::lower_bound(reps.begin(), reps.end(), c) - reps.begin()); };
    std::vector<edge> quotient;
    for (const auto& [u, v] : g.edges) {
        std::size_t a = rank(cls[u]), b = rank(cls[v]);
        if (a != b) quotient.push_back(make_edge(static_cast<vertex>(a), static_cast<vertex>(b)));
    }
    std::sort(quotient.begin(), quotient.end());
    quotient.erase(std::unique(quotient.begin(), quotient.end()), quotient.end());
    const std::size_t q = reps.size();
    if (quotient.size() != q - 1) return false;
    std::vector<int> deg(q, 0);
    detail::DisjointSets comp(q);
    for (const auto& [a, b] : quotient) {
        if (++deg[a] > 2 || ++deg[b] > 2) return false;
        if (!comp.unite(a, b)) return false;
    }
    return true;
}

inline SolutionSet exact_path_contraction(const EdgeList& g, int k, std::size_t max_edges = 25) {
    std::vector<edge> distinct;
    for (const auto& [u, v] : g.edges)
        if (u != v) distinct.push_back(make_edge(u, v));
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() > max_edges)
        throw CapExceeded("path contraction oracle: " + std::to_string(distinct.size()) + " edges exceeds cap");
    SolutionSet out;
    detail::for_each_subset(distinct.size(), k, [&](const std::vector<std::size_t>& idx) {
        std::vector<edge> chosen;
        for (std::size_t i : idx) chosen.push_back(distinct[i]);
        for (const auto& s : out.edge_solutions)
            if (detail::includes_sorted(chosen, s)) return;
        if (contracts_to_path(g, chosen)) out.edge_solutions.push_back(chosen);
    });
    out.yes = !out.edge_solutions.empty();
    return out;
}

// Multigraph acyclicity after deleting `removed`: a surviving loop or repeated edge is a cycle.
inline bool acyclic_without(const EdgeList& g, const std::vector<vertex>& removed) {
    std::vector<char> gone(g.n, 0);
    for (vertex v : removed) gone[v] = 1;
    detail::DisjointSets ds(g.n);
    for (const auto& [u, v] : g.edges) {
        if (gone[u] || gone[v]) continue;
        if (u == v) return false;
        if (!ds.unite(u, v)) return false;
    }
    return true;
}

inline SolutionSet exact_fvs(const EdgeList& g, int k, std::size_t max_n = 20) {
    if (g.n > max_n) throw CapExceeded("fvs oracle: " + std::to_string(g.n) + " vertices exceeds cap");
    SolutionSet out;
    detail::for_each_subset(g.n, k, [&](const std::vector<std::size_t>& idx) {
        std::vector<vertex> chosen(idx.begin(), idx.end());
        for (const auto& s : out.vertex_solutions)
            if (detail::includes_sorted(chosen, s)) return;
        if (acyclic_without(g, chosen)) out.vertex_solutions.push_back(chosen);
    });
    out.yes = !out.vertex_solutions.empty();
    return out;
}

// Every connected component is a clique.
inline bool is_cluster_graph(std::size_t n, const std::vector<std::vector<char>>& adj) {
    detail::DisjointSets ds(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (adj[u][v]) ds.unite(u, v);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (ds.find(u) == ds.find(v) && !adj[u][v]) return false;
    return true;
}

// Solutions list the toggled vertex pairs; whether a pair is an addition follows from g.
inline SolutionSet exact_cluster(const EdgeList& g, int k, ClusterMode mode) {
    const std::size_t cap = mode == ClusterMode::editing ? 7 : 9;
    if (g.n > cap) throw CapExceeded("cluster oracle: " + std::to_string(g.n) + " vertices exceeds cap");
    std::vector<std::vector<char>> adj(g.n, std::vector<char>(g.n, 0));
    for (const auto& [u, v] : g.edges) {
        if (u == v) throw std::invalid_argument("cluster oracle needs a simple graph");
        adj[u][v] = adj[v][u] = 1;
    }
    std::vector<edge> candidates;
    for (vertex u = 0; u < g.n; ++u)
        for (vertex v = u + 1; v < g.n; ++v)
            if (mode == ClusterMode::editing || adj[u][v]) candidates.emplace_back(u, v);
    SolutionSet out;
    detail::for_each_subset(candidates.size(), k, [&](const std::vector<std::size_t>& idx) {
        std::vector<edge> chosen;
        for (std::size_t i : idx) chosen.push_back(candidates[i]);
        for (const auto& s : out.edge_solutions)
            if (detail::includes_sorted(chosen, s)) return;
        auto mod = adj;
        for (const auto& [u, v] : chosen) mod[u][v] = mod[v][u] = static_cast<char>(!mod[u][v]);
        if (is_cluster_graph(g.n, mod)) out.edge_solutions.push_back(chosen);
    });
    out.yes = !out.edge_solutions.empty();
    return out;
}

}  // namespace lsk::oracle
