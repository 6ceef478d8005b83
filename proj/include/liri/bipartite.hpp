#pragma once

#include <optional>
#include <set>
#include <vector>

#include "liri/graph.hpp"
#include "liri/irregularity.hpp"
#include "liri/structure.hpp"

namespace liri {

struct PathSystem {
    std::vector<std::vector<int>> paths;  // vertex sequences
    std::set<int> endpoints;              // the set S

    EdgeSet edge_union() const;
};

// A forest together with one side of its bipartition in which every vertex
// has even degree.
struct BalancedForest {
    Graph forest;
    std::set<int> even_class;
};

// Edge-disjoint paths whose endpoint set is exactly s, each s-vertex ending
// exactly one path; their union is a forest in which every vertex outside s
// has even degree. Requires g connected and |s| even.
PathSystem path_system(const Graph& g, const std::set<int>& s);

// 2-class locally irregular coloring of a balanced forest in which every
// even_class vertex is monochromatic.
Decomposition color_balanced_forest(const BalancedForest& f);

// Decomposition of the edge-disjoint union of an even cycle c through v
// (induced in the union) and a path p starting at v, into <= 4 classes.
// c and p are vertex sequences starting at v; p may be just {v}.
Decomposition decompose_path_plus_cycle(const std::vector<int>& c, const std::vector<int>& p,
                                        int v);

// Forest with leaves in A whose removal makes every A-degree even.
// Requires g connected of even size.
BalancedForest make_A_even(const Graph& g, const Bipartition& b);

// Forest with leaves in B whose removal leaves every vertex of B except
// possibly v with odd degree. Requires g connected with all A-degrees even.
BalancedForest make_B_almost_odd(const Graph& g, const Bipartition& b, int v);

// Greedy conflict walk from v; removing the returned path's edges leaves a
// locally irregular graph. Requires all A-degrees even and all degrees in
// B minus v odd. Returns the path as a vertex sequence starting at v.
std::vector<int> delete_conflict_path(const Graph& g, const Bipartition& b, int v);

struct AEvenTrace {
    int direct = 0;    // remainder locally irregular after the forest step
    int cut_edge = 0;  // no cycle through v: split at a cut edge
    int cycle = 0;     // shortest cycle + conflict path
};

// <= 7 classes for a bipartite graph with all A-degrees even.
Decomposition decompose_A_even(const Graph& g, const Bipartition& b,
                               AEvenTrace* trace = nullptr);

// <= 9 classes for a connected bipartite graph of even size.
Decomposition decompose_bipartite_even(const Graph& g);

// <= 10 classes for any connected bipartite graph; nullopt exactly for odd
// paths (the bipartite exceptional graphs).
std::optional<Decomposition> decompose_bipartite(const Graph& g);

}  // namespace liri
