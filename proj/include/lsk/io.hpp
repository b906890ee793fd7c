#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsk/graph.hpp"

namespace lsk {

struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Edge-list text:  "p <n> <m>", then m lines "e <u> <v>" or "l <v>"; '#' starts a comment.
struct GraphDocument {
    std::size_t n = 0;
    std::vector<edge> edges;  // as written, duplicates kept
    std::vector<vertex> loops;
};

inline GraphDocument parse_document(std::istream& in) {
    GraphDocument doc;
    bool have_header = false;
    std::size_t declared_m = 0;
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& why) {
        throw FormatError("line " + std::to_string(lineno) + ": " + why);
    };
    auto read_id = [&](std::istringstream& ss) {
        long long x;
        if (!(ss >> x)) fail("expected vertex id");
        if (x < 0) fail("negative vertex id");
        if (static_cast<unsigned long long>(x) >= doc.n) fail("vertex id " + std::to_string(x) + " >= n");
        return static_cast<vertex>(x);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag)) continue;
        if (tag == "p") {
            if (have_header) fail("second header");
            long long n, m;
            if (!(ss >> n >> m) || n < 0 || m < 0) fail("malformed header");
            if (n >= static_cast<long long>(no_vertex)) fail("too many vertices");
            doc.n = static_cast<std::size_t>(n);
            declared_m = static_cast<std::size_t>(m);
            have_header = true;
        } else if (tag == "e") {
            if (!have_header) fail("edge before header");
            vertex u = read_id(ss);
            vertex v = read_id(ss);
            doc.edges.emplace_back(u, v);
        } else if (tag == "l") {
            if (!have_header) fail("loop before header");
            doc.loops.push_back(read_id(ss));
        } else {
            fail("unknown line type '" + tag + "'");
        }
        std::string rest;
        if (ss >> rest) fail("trailing tokens");
    }
    if (!have_header) throw FormatError("missing header line");
    if (doc.edges.size() + doc.loops.size() != declared_m)
        throw FormatError("header declares " + std::to_string(declared_m) + " edges, found " +
                          std::to_string(doc.edges.size() + doc.loops.size()));
    return doc;
}

// Simple input graph. Self-loops are errors; duplicates are dropped with a warning.
inline StaticGraph load_graph(std::istream& in, std::vector<std::string>* warnings = nullptr) {
    GraphDocument doc = parse_document(in);
    if (!doc.loops.empty()) throw FormatError("self-loop at vertex " + std::to_string(doc.loops.front()));
    for (const auto& [u, v] : doc.edges)
        if (u == v) throw FormatError("self-loop at vertex " + std::to_string(u));
    return StaticGraph::from_edges(doc.n, std::move(doc.edges), warnings);
}

inline StaticGraph load_graph_text(const std::string& text, std::vector<std::string>* warnings = nullptr) {
    std::istringstream in(text);
    return load_graph(in, warnings);
}

// Multigraph on ids 0..n-1; repeated "e" lines become parallel edges, "l" lines loops.
inline KernelGraph load_kernel(std::istream& in) {
    GraphDocument doc = parse_document(in);
    KernelGraph g;
    for (vertex v = 0; v < doc.n; ++v) g.add_vertex(v);
    for (const auto& [u, v] : doc.edges) g.add_edge(u, v);
    for (vertex v : doc.loops) g.add_edge(v, v);
    return g;
}

inline void write_graph(std::ostream& out, const StaticGraph& g) {
    out << "p " << g.n() << ' ' << g.m() << '\n';
    for (const auto& [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
}

// Vertices are renumbered 0..n'-1 in ascending original id; "# id <new> <orig>" records the map.
inline void write_kernel(std::ostream& out, const KernelGraph& g) {
    std::vector<vertex> ids;
    EdgeList el = to_edge_list(g, &ids);
    out << "p " << el.n << ' ' << el.edges.size() << '\n';
    for (std::size_t i = 0; i < ids.size(); ++i) out << "# id " << i << ' ' << ids[i] << '\n';
    for (const auto& [u, v] : el.edges) {
        if (u == v)
            out << "l " << u << '\n';
        else
            out << "e " << u << ' ' << v << '\n';
    }
}

inline EdgeList load_edge_list(std::istream& in) {
    GraphDocument doc = parse_document(in);
    EdgeList el{doc.n, {}};
    for (const auto& [u, v] : doc.edges) el.edges.push_back(make_edge(u, v));
    for (vertex v : doc.loops) el.edges.emplace_back(v, v);
    std::sort(el.edges.begin(), el.edges.end());
    return el;
}

}  // namespace lsk
