#pragma once

#include <compare>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace liri {

class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

class precondition_error : public std::runtime_error {
public:
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// Undirected edge, stored with u < v.
struct Edge {
    int u;
    int v;

    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw precondition_error("loop edge {" + std::to_string(a) + "} not allowed");
        if (a < 0 || b < 0) throw precondition_error("negative vertex id in edge");
    }

    auto operator<=>(const Edge&) const = default;

    bool touches(int x) const { return u == x || v == x; }
    int other(int x) const { return x == u ? v : u; }
};

using EdgeSet = std::set<Edge>;

// Simple finite undirected graph. Immutable after construction; mutating
// helpers return new graphs.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<int> vertices, std::vector<Edge> edges);

    // Edge-list text: "u v" per edge, "v" for an isolated vertex, '#' comment
    // lines, blank lines allowed.
    static Graph parse_edge_list(const std::string& text);
    static Graph from_edges(const std::vector<Edge>& edges);
    static Graph from_edges(const EdgeSet& edges);

    std::string to_edge_list() const;

    const std::vector<int>& vertices() const { return verts_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t order() const { return verts_.size(); }
    std::size_t size() const { return edges_.size(); }
    bool odd_size() const { return size() % 2 == 1; }
    bool empty() const { return verts_.empty(); }

    bool has_vertex(int v) const;
    bool has_edge(int a, int b) const;
    bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }
    int degree(int v) const;
    int min_degree() const;
    int max_degree() const;
    const std::vector<int>& neighbors(int v) const;

    Graph minus_edge(const Edge& e) const;
    Graph minus_edges(const EdgeSet& es) const;
    Graph minus_vertex(int v) const;
    Graph with_edge(const Edge& e) const;
    Graph with_vertex(int v) const;
    Graph induced(const std::set<int>& vs) const;
    // Subgraph on a subset of this graph's edges; vertices are the endpoints.
    Graph edge_subgraph(const EdgeSet& es) const;

    EdgeSet edge_set() const { return EdgeSet(edges_.begin(), edges_.end()); }

    bool operator==(const Graph& o) const { return verts_ == o.verts_ && edges_ == o.edges_; }

private:
    std::vector<int> verts_;   // sorted, unique
    std::vector<Edge> edges_;  // sorted, unique
    std::map<int, std::vector<int>> adj_;
};

}  // namespace liri
