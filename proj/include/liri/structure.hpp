#pragma once

#include <array>
#include <optional>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "liri/graph.hpp"

namespace liri {

struct Component {
    std::vector<int> vertices;  // sorted
    std::size_t edge_count = 0;
    bool even() const { return edge_count % 2 == 0; }
};

std::vector<Component> components(const Graph& g);
bool is_connected(const Graph& g);
bool all_components_even(const Graph& g);

// Connected component containing v, as a graph on that vertex set.
Graph component_of(const Graph& g, int v);

struct Bipartition {
    std::set<int> class_a;
    std::set<int> class_b;
    bool in_a(int v) const { return class_a.count(v) > 0; }
};

// Cycle witness for non-bipartite graphs: odd cycle as a vertex sequence.
struct OddCycle {
    std::vector<int> cycle;
};

// Per component, class_a is the side containing the smallest vertex id.
std::variant<Bipartition, OddCycle> bipartition(const Graph& g);
std::optional<Bipartition> try_bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

struct DegeneracyResult {
    int degeneracy = 0;
    std::vector<int> ordering;  // elimination order
};

DegeneracyResult degeneracy_order(const Graph& g);

// Minimum number of edges whose removal disconnects g. Requires g connected
// with at least 2 vertices.
int edge_connectivity(const Graph& g);

// Shortest cycle containing v, as a vertex sequence starting at v, or nullopt.
// Ties broken by lexicographically smallest vertex sequence.
std::optional<std::vector<int>> shortest_cycle_through(const Graph& g, int v);

struct Orientation {
    std::vector<std::pair<int, int>> arcs;  // tail -> head, one per edge
};

// |outdeg(v) - indeg(v)| <= 1 at every vertex.
Orientation almost_balanced_orientation(const Graph& g);

EdgeSet bridges(const Graph& g);
bool is_cut_edge(const Graph& g, const Edge& e);

std::vector<std::array<int, 3>> triangles(const Graph& g);

// BFS spanning tree edges of a connected graph, rooted at the smallest id.
EdgeSet spanning_tree(const Graph& g);

// Shortest path between two vertices as a vertex sequence, if connected.
std::optional<std::vector<int>> shortest_path(const Graph& g, int from, int to);

std::vector<Edge> incident_edges(const Graph& g, int v);

}  // namespace liri
