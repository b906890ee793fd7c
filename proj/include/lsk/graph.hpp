#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lsk {

using vertex = std::uint32_t;
inline constexpr vertex no_vertex = std::numeric_limits<vertex>::max();

using edge = std::pair<vertex, vertex>;

inline edge make_edge(vertex u, vertex v) { return u < v ? edge{u, v} : edge{v, u}; }

// Counts mutable words: one stored vertex id, counter, or edge-endpoint slot each.
class SpaceMeter {
public:
    void charge(std::int64_t delta) {
        if (delta < 0 && -delta > current_) throw std::logic_error("space meter underflow");
        current_ += delta;
        peak_ = std::max(peak_, current_);
    }
    [[nodiscard]] std::int64_t current() const { return current_; }
    [[nodiscard]] std::int64_t peak() const { return peak_; }

private:
    std::int64_t current_ = 0;
    std::int64_t peak_ = 0;
};

// Charges a fixed number of words for its lifetime.
class MeterLease {
public:
    MeterLease(SpaceMeter* meter, std::int64_t words) : meter_(meter), words_(words) {
        if (meter_) meter_->charge(words_);
    }
    MeterLease(const MeterLease&) = delete;
    MeterLease& operator=(const MeterLease&) = delete;
    ~MeterLease() {
        if (meter_) meter_->charge(-words_);
    }

private:
    SpaceMeter* meter_;
    std::int64_t words_;
};

// Ordered set that charges `words_per_entry` for every element it holds.
template <class K>
class TrackedSet {
public:
    explicit TrackedSet(SpaceMeter* meter, std::int64_t words_per_entry = 1)
        : meter_(meter), words_(words_per_entry) {}
    TrackedSet(const TrackedSet&) = delete;
    TrackedSet& operator=(const TrackedSet&) = delete;
    TrackedSet(TrackedSet&& o) noexcept : meter_(o.meter_), words_(o.words_), set_(std::move(o.set_)) {
        o.set_.clear();
    }
    ~TrackedSet() { clear(); }

    bool insert(const K& key) {
        bool added = set_.insert(key).second;
        if (added && meter_) meter_->charge(words_);
        return added;
    }
    bool erase(const K& key) {
        bool removed = set_.erase(key) > 0;
        if (removed && meter_) meter_->charge(-words_);
        return removed;
    }
    void clear() {
        if (meter_) meter_->charge(-words_ * static_cast<std::int64_t>(set_.size()));
        set_.clear();
    }
    [[nodiscard]] bool contains(const K& key) const { return set_.count(key) > 0; }
    [[nodiscard]] std::size_t size() const { return set_.size(); }
    [[nodiscard]] bool empty() const { return set_.empty(); }
    auto begin() const { return set_.begin(); }
    auto end() const { return set_.end(); }
    [[nodiscard]] const std::set<K>& raw() const { return set_; }

private:
    SpaceMeter* meter_;
    std::int64_t words_;
    std::set<K> set_;
};

// Ordered map that charges `words_per_entry` for every key it holds.
template <class K, class V>
class TrackedMap {
public:
    explicit TrackedMap(SpaceMeter* meter, std::int64_t words_per_entry = 2)
        : meter_(meter), words_(words_per_entry) {}
    TrackedMap(const TrackedMap&) = delete;
    TrackedMap& operator=(const TrackedMap&) = delete;
    TrackedMap(TrackedMap&& o) noexcept : meter_(o.meter_), words_(o.words_), map_(std::move(o.map_)) {
        o.map_.clear();
    }
    ~TrackedMap() { clear(); }

    V& operator[](const K& key) {
        auto [it, added] = map_.try_emplace(key);
        if (added && meter_) meter_->charge(words_);
        return it->second;
    }
    bool erase(const K& key) {
        bool removed = map_.erase(key) > 0;
        if (removed && meter_) meter_->charge(-words_);
        return removed;
    }
    void clear() {
        if (meter_) meter_->charge(-words_ * static_cast<std::int64_t>(map_.size()));
        map_.clear();
    }
    [[nodiscard]] const V* find(const K& key) const {
        auto it = map_.find(key);
        return it == map_.end() ? nullptr : &it->second;
    }
    [[nodiscard]] V* find(const K& key) {
        auto it = map_.find(key);
        return it == map_.end() ? nullptr : &it->second;
    }
    [[nodiscard]] bool contains(const K& key) const { return map_.count(key) > 0; }
    [[nodiscard]] std::size_t size() const { return map_.size(); }
    [[nodiscard]] bool empty() const { return map_.empty(); }
    auto begin() const { return map_.begin(); }
    auto end() const { return map_.end(); }

private:
    SpaceMeter* meter_;
    std::int64_t words_;
    std::map<K, V> map_;
};

// Sorted vertex-id vector (one word per id); usable directly as an exclusion set.
class SortedIds {
public:
    explicit SortedIds(SpaceMeter* meter = nullptr) : meter_(meter) {}
    SortedIds(const SortedIds&) = delete;
    SortedIds& operator=(const SortedIds&) = delete;
    ~SortedIds() {
        if (meter_) meter_->charge(-static_cast<std::int64_t>(ids_.size()));
    }

    bool insert(vertex v) {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
        if (it != ids_.end() && *it == v) return false;
        ids_.insert(it, v);
        if (meter_) meter_->charge(1);
        return true;
    }
    bool erase(vertex v) {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
        if (it == ids_.end() || *it != v) return false;
        ids_.erase(it);
        if (meter_) meter_->charge(-1);
        return true;
    }
    [[nodiscard]] bool contains(vertex v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }
    [[nodiscard]] std::size_t size() const { return ids_.size(); }
    [[nodiscard]] bool empty() const { return ids_.empty(); }
    [[nodiscard]] std::span<const vertex> span() const { return ids_; }
    [[nodiscard]] const std::vector<vertex>& vec() const { return ids_; }
    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

private:
    SpaceMeter* meter_;
    std::vector<vertex> ids_;
};

// Immutable simple undirected graph in CSR form. Never charged to a meter.
class StaticGraph {
public:
    StaticGraph() : offsets_(1, 0) {}

    // Deduplicates edges (each duplicate appends a message to `warnings` when given).
    // Throws std::invalid_argument on self-loops or ids >= n.
    static StaticGraph from_edges(std::size_t n, std::vector<edge> edges,
                                  std::vector<std::string>* warnings = nullptr) {
        for (auto& [u, v] : edges) {
            if (u >= n || v >= n)
                throw std::invalid_argument("vertex id out of range in edge " + std::to_string(u) +
                                            " " + std::to_string(v));
            if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        std::vector<edge> unique;
        unique.reserve(edges.size());
        for (const auto& e : edges) {
            if (!unique.empty() && unique.back() == e) {
                if (warnings)
                    warnings->push_back("duplicate edge " + std::to_string(e.first) + " " +
                                        std::to_string(e.second) + " ignored");
                continue;
            }
            unique.push_back(e);
        }

        StaticGraph g;
        g.n_ = n;
        g.edges_ = std::move(unique);
        std::vector<std::size_t> deg(n, 0);
        for (const auto& [u, v] : g.edges_) {
            ++deg[u];
            ++deg[v];
        }
        g.offsets_.assign(n + 1, 0);
        for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
        g.targets_.resize(g.offsets_[n]);
        std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
        for (const auto& [u, v] : g.edges_) {
            g.targets_[fill[u]++] = v;
            g.targets_[fill[v]++] = u;
        }
        for (std::size_t v = 0; v < n; ++v)
            std::sort(g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
                      g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
        return g;
    }

    [[nodiscard]] std::size_t n() const { return n_; }
    [[nodiscard]] std::size_t m() const { return edges_.size(); }
    [[nodiscard]] std::size_t degree(vertex v) const { return offsets_[v + 1] - offsets_[v]; }
    [[nodiscard]] std::span<const vertex> neighbors(vertex v) const {
        return {targets_.data() + offsets_[v], degree(v)};
    }
    [[nodiscard]] bool has_edge(vertex u, vertex v) const {
        if (u >= n_ || v >= n_) return false;
        auto nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }
    // Sorted list of edges with u < v.
    [[nodiscard]] const std::vector<edge>& edges() const { return edges_; }

private:
    std::size_t n_ = 0;
    std::vector<edge> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<vertex> targets_;
};

// G[V \ excluded], realized by skipping excluded vertices on the fly.
// `excluded` must be sorted ascending and outlive the view. Up to two extra
// vertices can be excluded on top of it without copying the set.
class ExclusionView {
public:
    ExclusionView(const StaticGraph& g, std::span<const vertex> excluded = {})
        : g_(&g), excluded_(excluded) {}

    [[nodiscard]] const StaticGraph& base() const { return *g_; }
    [[nodiscard]] std::span<const vertex> excluded_set() const { return excluded_; }

    [[nodiscard]] ExclusionView without(vertex v) const {
        ExclusionView out = *this;
        if (out.extra_[0] == no_vertex)
            out.extra_[0] = v;
        else if (out.extra_[1] == no_vertex)
            out.extra_[1] = v;
        else
            throw std::logic_error("exclusion view supports two extra exclusions");
        return out;
    }

    [[nodiscard]] bool excluded(vertex v) const {
        if (v == extra_[0] || v == extra_[1]) return true;
        return std::binary_search(excluded_.begin(), excluded_.end(), v);
    }

    void require(vertex v) const {
        if (v >= g_->n()) throw std::invalid_argument("vertex out of range");
        if (excluded(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " is excluded");
    }

    // Smallest view neighbor of v strictly greater than `after` (no_vertex: from the start).
    [[nodiscard]] vertex next_neighbor(vertex v, vertex after) const {
        auto nb = g_->neighbors(v);
        auto it = after == no_vertex ? nb.begin() : std::upper_bound(nb.begin(), nb.end(), after);
        for (; it != nb.end(); ++it)
            if (!excluded(*it)) return *it;
        return no_vertex;
    }
    [[nodiscard]] vertex first_neighbor(vertex v) const { return next_neighbor(v, no_vertex); }

    [[nodiscard]] std::size_t degree(vertex v) const {
        std::size_t d = 0;
        for (vertex u : g_->neighbors(v))
            if (!excluded(u)) ++d;
        return d;
    }

    [[nodiscard]] bool has_edge(vertex u, vertex v) const {
        return !excluded(u) && !excluded(v) && g_->has_edge(u, v);
    }

    template <class F>
    void for_each_neighbor(vertex v, F&& f) const {
        for (vertex u : g_->neighbors(v))
            if (!excluded(u)) f(u);
    }

    [[nodiscard]] std::vector<vertex> neighbors(vertex v) const {
        require(v);
        std::vector<vertex> out;
        for_each_neighbor(v, [&](vertex u) { out.push_back(u); });
        return out;
    }

private:
    const StaticGraph* g_;
    std::span<const vertex> excluded_;
    vertex extra_[2] = {no_vertex, no_vertex};
};

inline std::vector<vertex> view_neighbors(const ExclusionView& view, vertex v) {
    return view.neighbors(v);
}

// Mutable multigraph keyed by original vertex ids. adj_[v][v] holds the loop count.
// Charges 1 word per vertex and 2 words (id + multiplicity) per adjacency entry.
class KernelGraph {
public:
    KernelGraph() = default;
    explicit KernelGraph(SpaceMeter* meter) : meter_(meter) {}
    KernelGraph(const KernelGraph& other) : adj_(other.adj_), m_(other.m_) {}
    KernelGraph& operator=(const KernelGraph& other) {
        if (this != &other) {
            detach();
            adj_ = other.adj_;
            m_ = other.m_;
        }
        return *this;
    }
    KernelGraph(KernelGraph&& other) noexcept
        : adj_(std::move(other.adj_)), m_(other.m_), meter_(other.meter_) {
        other.adj_.clear();
        other.m_ = 0;
        other.meter_ = nullptr;
    }
    KernelGraph& operator=(KernelGraph&& other) noexcept {
        if (this != &other) {
            detach();
            adj_ = std::move(other.adj_);
            m_ = other.m_;
            meter_ = other.meter_;
            other.adj_.clear();
            other.m_ = 0;
            other.meter_ = nullptr;
        }
        return *this;
    }
    ~KernelGraph() { detach(); }

    // Refunds every charged word and stops charging.
    void detach() {
        if (meter_) meter_->charge(-words());
        meter_ = nullptr;
    }

    [[nodiscard]] std::int64_t words() const {
        std::int64_t w = static_cast<std::int64_t>(adj_.size());
        for (const auto& [v, nb] : adj_) w += 2 * static_cast<std::int64_t>(nb.size());
        return w;
    }

    void add_vertex(vertex v) {
        if (adj_.try_emplace(v).second) charge(1);
    }
    [[nodiscard]] bool has_vertex(vertex v) const { return adj_.count(v) > 0; }

    void remove_vertex(vertex v) {
        auto it = adj_.find(v);
        if (it == adj_.end()) return;
        std::vector<vertex> nbs;
        for (const auto& [u, c] : it->second) nbs.push_back(u);
        for (vertex u : nbs) remove_edge(v, u);
        adj_.erase(v);
        charge(-1);
    }

    void add_edge(vertex u, vertex v, std::uint32_t multiplicity = 1) {
        if (multiplicity == 0) return;
        add_vertex(u);
        add_vertex(v);
        bump(u, v, multiplicity);
        if (u != v) bump(v, u, multiplicity);
        m_ += multiplicity;
    }

    // Removes all parallel copies (or all loops when u == v); returns how many were removed.
    std::uint32_t remove_edge(vertex u, vertex v) {
        std::uint32_t c = multiplicity(u, v);
        if (c == 0) return 0;
        drop(u, v);
        if (u != v) drop(v, u);
        m_ -= c;
        return c;
    }

    [[nodiscard]] std::uint32_t multiplicity(vertex u, vertex v) const {
        auto it = adj_.find(u);
        if (it == adj_.end()) return 0;
        auto jt = it->second.find(v);
        return jt == it->second.end() ? 0 : jt->second;
    }
    [[nodiscard]] bool has_edge(vertex u, vertex v) const { return multiplicity(u, v) > 0; }
    [[nodiscard]] std::uint32_t loops(vertex v) const { return multiplicity(v, v); }

    // Loops count twice, parallel edges by multiplicity.
    [[nodiscard]] std::size_t degree(vertex v) const {
        auto it = adj_.find(v);
        if (it == adj_.end()) return 0;
        std::size_t d = 0;
        for (const auto& [u, c] : it->second) d += (u == v ? 2u : 1u) * c;
        return d;
    }

    [[nodiscard]] const std::map<vertex, std::uint32_t>& neighbors(vertex v) const {
        static const std::map<vertex, std::uint32_t> empty;
        auto it = adj_.find(v);
        return it == adj_.end() ? empty : it->second;
    }

    [[nodiscard]] std::size_t vertex_count() const { return adj_.size(); }
    [[nodiscard]] std::size_t edge_count() const { return m_; }

    [[nodiscard]] std::vector<vertex> vertices() const {
        std::vector<vertex> out;
        out.reserve(adj_.size());
        for (const auto& [v, nb] : adj_) out.push_back(v);
        return out;
    }

    // Sorted edge multiset, u <= v, one entry per copy.
    [[nodiscard]] std::vector<edge> edge_list() const {
        std::vector<edge> out;
        for (const auto& [v, nb] : adj_)
            for (const auto& [u, c] : nb)
                if (v <= u)
                    for (std::uint32_t i = 0; i < c; ++i) out.emplace_back(v, u);
        return out;
    }

    friend bool operator==(const KernelGraph& a, const KernelGraph& b) { return a.adj_ == b.adj_; }

private:
    void charge(std::int64_t w) {
        if (meter_) meter_->charge(w);
    }
    void bump(vertex a, vertex b, std::uint32_t c) {
        auto& nb = adj_[a];
        auto [it, added] = nb.try_emplace(b, 0);
        if (added) charge(2);
        it->second += c;
    }
    void drop(vertex a, vertex b) {
        adj_[a].erase(b);
        charge(-2);
    }

    std::map<vertex, std::map<vertex, std::uint32_t>> adj_;
    std::size_t m_ = 0;
    SpaceMeter* meter_ = nullptr;
};

// Plain multigraph on 0..n-1 (loops as u == v, parallel edges repeated); oracle input.
struct EdgeList {
    std::size_t n = 0;
    std::vector<edge> edges;
};

inline EdgeList to_edge_list(const StaticGraph& g) { return {g.n(), g.edges()}; }

// Relabels kernel vertices to 0..n'-1 in ascending original-id order.
inline EdgeList to_edge_list(const KernelGraph& g, std::vector<vertex>* original_ids = nullptr) {
    auto verts = g.vertices();
    auto id = [&](vertex v) {
        return static_cast<vertex>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    EdgeList out;
    out.n = verts.size();
    for (const auto& [u, v] : g.edge_list()) out.edges.push_back(make_edge(id(u), id(v)));
    std::sort(out.edges.begin(), out.edges.end());
    if (original_ids) *original_ids = std::move(verts);
    return out;
}

struct Verdict {
    bool no_instance = true;
    KernelGraph kernel;
    int k_prime = 0;

    static Verdict no() { return {}; }
    static Verdict yes(KernelGraph g, int k) {
        g.detach();
        Verdict v;
        v.no_instance = false;
        v.kernel = std::move(g);
        v.k_prime = k;
        return v;
    }
    [[nodiscard]] bool is_kernel() const { return !no_instance; }
};

}  // namespace lsk
