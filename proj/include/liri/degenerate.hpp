#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "liri/graph.hpp"
#include "liri/irregularity.hpp"

namespace liri {

// Edge-disjoint subgraphs partitioning a host graph's edges; each part is
// bipartite and every component of every part has even size.
using EvenBipartiteFamily = std::vector<Graph>;

// True iff the parts partition g's edges and each part is bipartite with all
// components of even size.
bool even_bipartite_family_ok(const Graph& g, const EvenBipartiteFamily& parts);

// Edges from v to the per-component minority side of g - v; removing them
// leaves a bipartite graph. |result| <= deg(v)/2. Requires g - v bipartite.
EdgeSet halve_neighbors(const Graph& g, int v);

// Same, padded with additional v-edges to exactly `target` edges. When
// keep_vertex is given, at least one edge from v into keep_vertex's component
// of g - v stays outside the result.
EdgeSet halve_neighbors_exact(const Graph& g, int v, int target,
                              std::optional<int> keep_vertex = std::nullopt);

// Given a family covering g - v (deg(v) even, ell >= ceil(log2 deg(v)) + 1
// parts), produce a family of ell parts covering g.
EvenBipartiteFamily extend_even_bipartite(const Graph& g, int v, EvenBipartiteFamily family,
                                          int ell);

// Decompose a d-degenerate graph whose components all have even size into
// ceil(log2(d+1)) + 1 bipartite parts with even components.
EvenBipartiteFamily decompose_degenerate_even(const Graph& g, int d);

// Number of parts produced by decompose_degenerate_even.
int degenerate_part_bound(long long d);

// Locally irregular decomposition of a connected even-size d-degenerate graph
// into at most 9 * degenerate_part_bound(d) classes.
Decomposition chi_bound_degenerate(const Graph& g, int d);

// Split a connected even-size graph into D (2d-degenerate, all components
// even) and H (minimum degree >= d). Returns {D, H}; D keeps all vertices of
// g, H only its covered vertices.
std::pair<Graph, Graph> split_degenerate_min_degree(const Graph& g, int d);

// Decomposer for graphs of large minimum degree, used as the final pipeline
// stage; must return at most 3 classes.
struct HighDegreeDecomposer {
    int threshold = 0;
    std::function<Decomposition(const Graph&)> decompose;
};

// Full pipeline for a connected non-exceptional graph: odd-size reduction,
// degenerate/min-degree split, bipartite machinery on the degenerate part,
// plugin on the high-degree part.
Decomposition decompose_general(const Graph& g, const HighDegreeDecomposer& plugin);

// Class-count bounds of the pipeline with plugin threshold d.
long long general_chi_bound_even(long long d);  // 3 + 9 * degenerate_part_bound(2d)
long long general_chi_bound(long long d);       // one more for the odd-size reduction

}  // namespace liri
