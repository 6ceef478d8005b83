#include "liri/irregularity.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "liri/structure.hpp"

namespace liri {

int Decomposition::class_count() const { return static_cast<int>(classes_used().size()); }

std::vector<int> Decomposition::classes_used() const {
    std::set<int> cs;
    for (const auto& [e, c] : color) cs.insert(c);
    return std::vector<int>(cs.begin(), cs.end());
}

Graph Decomposition::class_graph(int c) const {
    EdgeSet es;
    for (const auto& [e, col] : color)
        if (col == c) es.insert(e);
    return graph.edge_subgraph(es);
}

Decomposition Decomposition::parse(const Graph& g, const std::string& text) {
    Decomposition d;
    d.graph = g;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string where = "line " + std::to_string(lineno) + ": ";
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        long long u, v, c;
        if (!(ls >> u)) continue;  // blank
        if (!(ls >> v >> c)) throw parse_error(where + "expected \"u v c\"");
        std::string extra;
        if (ls >> extra) throw parse_error(where + "trailing token '" + extra + "'");
        if (u < 0 || v < 0 || u == v) throw parse_error(where + "bad edge endpoints");
        Edge e(static_cast<int>(u), static_cast<int>(v));
        if (!g.has_edge(e)) throw parse_error(where + "edge not in graph");
        if (c < 1) throw parse_error(where + "class index must be >= 1");
        if (d.color.count(e)) throw parse_error(where + "edge colored twice");
        d.color[e] = static_cast<int>(c);
    }
    return d;
}

std::string Decomposition::serialize() const {
    std::ostringstream out;
    for (const auto& [e, c] : color)
        out << e.u << ' ' << e.v << ' ' << c << '\n';
    return out.str();
}

bool is_locally_irregular(const Graph& g) {
    for (const Edge& e : g.edges())
        if (g.degree(e.u) == g.degree(e.v)) return false;
    return true;
}

Certificate verify(const Decomposition& d, std::optional<int> max_classes) {
    for (const Edge& e : d.graph.edges())
        if (!d.color.count(e))
            throw precondition_error("verify: uncolored edge {" + std::to_string(e.u) + "," +
                                     std::to_string(e.v) + "}");
    for (const auto& [e, c] : d.color) {
        if (c < 1) throw precondition_error("verify: class index < 1");
        if (!d.graph.has_edge(e)) throw precondition_error("verify: colored edge not in graph");
    }
    Certificate cert;
    cert.max_classes = max_classes;
    for (int c : d.classes_used()) {
        Graph h = d.class_graph(c);
        for (const Edge& e : h.edges()) {
            int du = h.degree(e.u), dv = h.degree(e.v);
            if (du == dv) cert.violations.push_back({c, e, du, dv});
        }
    }
    cert.class_count = d.class_count();
    cert.valid = cert.violations.empty() &&
                 (!max_classes || cert.class_count <= *max_classes);
    return cert;
}

namespace {

bool is_path_graph(const Graph& g) {
    // connected, acyclic, max degree <= 2; single vertex counts as a path
    if (g.order() == 0) return false;
    if (g.size() + 1 != g.order()) return false;
    return g.max_degree() <= 2;
}

bool is_cycle_graph(const Graph& g) {
    if (g.order() < 3 || g.size() != g.order()) return false;
    for (int v : g.vertices())
        if (g.degree(v) != 2) return false;
    return true;
}

bool in_family_t(const Graph& g) {
    auto tris = triangles(g);
    if (tris.empty()) return false;

    // Triangles must be pairwise vertex-disjoint, and the only cycles.
    std::set<int> tri_verts;
    for (const auto& t : tris)
        for (int v : t)
            if (!tri_verts.insert(v).second) return false;
    EdgeSet tri_edges;
    for (const auto& t : tris) {
        tri_edges.insert(Edge(t[0], t[1]));
        tri_edges.insert(Edge(t[0], t[2]));
        tri_edges.insert(Edge(t[1], t[2]));
    }
    EdgeSet cut = bridges(g);
    for (const Edge& e : g.edges())
        if (!tri_edges.count(e) && !cut.count(e)) return false;

    // Degree limits: triangle vertices <= 3, others <= 2.
    for (int v : g.vertices()) {
        if (g.degree(v) > (tri_verts.count(v) ? 3 : 2)) return false;
    }

    // Chains of non-triangle edges run between terminals (triangle vertices
    // or leaves). A chain must have odd length exactly when both of its ends
    // are triangle vertices.
    std::set<Edge> seen;
    for (const Edge& start : g.edges()) {
        if (tri_edges.count(start) || seen.count(start)) continue;
        // walk both directions from this edge through degree-2 non-terminal
        // vertices
        auto walk = [&](int at, int prev, int& len) {
            while (!tri_verts.count(at) && g.degree(at) == 2) {
                int next = -1;
                for (int y : g.neighbors(at))
                    if (y != prev) next = y;
                seen.insert(Edge(at, next));
                prev = at;
                at = next;
                ++len;
            }
            return at;
        };
        seen.insert(start);
        int len = 1;
        int end_a = walk(start.u, start.v, len);
        int end_b = walk(start.v, start.u, len);
        bool both_tri = tri_verts.count(end_a) && tri_verts.count(end_b);
        if ((len % 2 == 1) != both_tri) return false;
    }
    return true;
}

}  // namespace

ExceptionalReason exceptional_reason(const Graph& g) {
    if (!is_connected(g)) throw precondition_error("exceptional_reason: input must be connected");
    if (is_path_graph(g)) return g.odd_size() ? ExceptionalReason::OddPath : ExceptionalReason::No;
    if (is_cycle_graph(g))
        return g.odd_size() ? ExceptionalReason::OddCycle : ExceptionalReason::No;
    if (in_family_t(g)) return ExceptionalReason::FamilyT;
    return ExceptionalReason::No;
}

bool is_exceptional(const Graph& g) { return exceptional_reason(g) != ExceptionalReason::No; }

}  // namespace liri
