#include "liri/graph.hpp"

#include <algorithm>
#include <sstream>

namespace liri {

Graph::Graph(std::vector<int> vertices, std::vector<Edge> edges)
    : verts_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(verts_.begin(), verts_.end());
    verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
    if (!verts_.empty() && verts_.front() < 0)
        throw precondition_error("negative vertex id");
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i] == edges_[i - 1])
            throw precondition_error("duplicate edge {" + std::to_string(edges_[i].u) + "," +
                                     std::to_string(edges_[i].v) + "}");
    for (const Edge& e : edges_) {
        if (!std::binary_search(verts_.begin(), verts_.end(), e.u) ||
            !std::binary_search(verts_.begin(), verts_.end(), e.v))
            throw precondition_error("edge endpoint is not a vertex of the graph");
    }
    for (int v : verts_) adj_[v];
    for (const Edge& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& [v, ns] : adj_) std::sort(ns.begin(), ns.end());
}

Graph Graph::parse_edge_list(const std::string& text) {
    std::vector<int> verts;
    std::vector<Edge> edges;
    EdgeSet seen;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string where = "line " + std::to_string(lineno);
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        std::istringstream ls(line);
        long a = -1, b = -1;
        std::string tok;
        std::vector<long> nums;
        while (ls >> tok) {
            try {
                std::size_t pos = 0;
                long val = std::stol(tok, &pos);
                if (pos != tok.size() || val < 0) throw std::invalid_argument(tok);
                nums.push_back(val);
            } catch (const std::exception&) {
                throw parse_error(where + ": malformed token '" + tok + "'");
            }
        }
        if (nums.size() == 1) {
            verts.push_back(static_cast<int>(nums[0]));
        } else if (nums.size() == 2) {
            a = nums[0];
            b = nums[1];
            if (a == b) throw parse_error(where + ": loop edge " + std::to_string(a));
            Edge e(static_cast<int>(a), static_cast<int>(b));
            if (!seen.insert(e).second)
                throw parse_error(where + ": duplicate edge " + std::to_string(a) + " " +
                                  std::to_string(b));
            edges.push_back(e);
            verts.push_back(e.u);
            verts.push_back(e.v);
        } else {
            throw parse_error(where + ": expected 'u v' or 'v'");
        }
    }
    return Graph(std::move(verts), std::move(edges));
}

Graph Graph::from_edges(const std::vector<Edge>& edges) {
    std::vector<int> verts;
    for (const Edge& e : edges) {
        verts.push_back(e.u);
        verts.push_back(e.v);
    }
    return Graph(std::move(verts), edges);
}

Graph Graph::from_edges(const EdgeSet& edges) {
    return from_edges(std::vector<Edge>(edges.begin(), edges.end()));
}

std::string Graph::to_edge_list() const {
    std::ostringstream out;
    for (const Edge& e : edges_) out << e.u << " " << e.v << "\n";
    for (int v : verts_)
        if (degree(v) == 0) out << v << "\n";
    return out.str();
}

bool Graph::has_vertex(int v) const {
    return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Graph::has_edge(int a, int b) const {
    if (a == b) return false;
    return std::binary_search(edges_.begin(), edges_.end(), Edge(a, b));
}

int Graph::degree(int v) const {
    auto it = adj_.find(v);
    if (it == adj_.end()) throw precondition_error("degree: no such vertex " + std::to_string(v));
    return static_cast<int>(it->second.size());
}

int Graph::min_degree() const {
    int best = -1;
    for (int v : verts_) {
        int d = degree(v);
        if (best < 0 || d < best) best = d;
    }
    return best;
}

int Graph::max_degree() const {
    int best = 0;
    for (int v : verts_) best = std::max(best, degree(v));
    return best;
}

const std::vector<int>& Graph::neighbors(int v) const {
    auto it = adj_.find(v);
    if (it == adj_.end())
        throw precondition_error("neighbors: no such vertex " + std::to_string(v));
    return it->second;
}

Graph Graph::minus_edge(const Edge& e) const { return minus_edges({e}); }

Graph Graph::minus_edges(const EdgeSet& es) const {
    std::vector<Edge> kept;
    kept.reserve(edges_.size());
    for (const Edge& e : edges_)
        if (!es.count(e)) kept.push_back(e);
    return Graph(verts_, std::move(kept));
}

Graph Graph::minus_vertex(int v) const {
    std::vector<int> verts;
    for (int x : verts_)
        if (x != v) verts.push_back(x);
    std::vector<Edge> kept;
    for (const Edge& e : edges_)
        if (!e.touches(v)) kept.push_back(e);
    return Graph(std::move(verts), std::move(kept));
}

Graph Graph::with_edge(const Edge& e) const {
    std::vector<int> verts = verts_;
    verts.push_back(e.u);
    verts.push_back(e.v);
    std::vector<Edge> edges = edges_;
    edges.push_back(e);
    return Graph(std::move(verts), std::move(edges));
}

Graph Graph::with_vertex(int v) const {
    std::vector<int> verts = verts_;
    verts.push_back(v);
    return Graph(std::move(verts), edges_);
}

Graph Graph::induced(const std::set<int>& vs) const {
    std::vector<int> verts(vs.begin(), vs.end());
    std::vector<Edge> edges;
    for (const Edge& e : edges_)
        if (vs.count(e.u) && vs.count(e.v)) edges.push_back(e);
    return Graph(std::move(verts), std::move(edges));
}

Graph Graph::edge_subgraph(const EdgeSet& es) const {
    std::vector<Edge> edges;
    for (const Edge& e : es) {
        if (!has_edge(e)) throw precondition_error("edge_subgraph: edge not in graph");
        edges.push_back(e);
    }
    return from_edges(edges);
}

}  // namespace liri
