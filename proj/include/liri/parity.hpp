#pragma once

#include <optional>
#include <utility>

#include "liri/graph.hpp"

namespace liri {

// Edge at v whose removal leaves only even-size components. Requires g
// connected, |E| odd, deg(v) >= 1. Prefers a non-cut edge; otherwise the cut
// edge with even far side; smallest-id ties.
Edge find_even_parity_edge(const Graph& g, int v);

// Two incident edges forming a path of length 2 through v whose removal
// leaves only even-size components. Requires g connected, |E| even >= 2,
// deg(v) >= 1.
std::pair<Edge, Edge> find_even_parity_path2(const Graph& g, int v);

struct OddReduction {
    Graph removed;  // locally irregular subgraph h
    Graph rest;     // g minus E(h); all components of even size
};

// For a connected odd-size graph: remove a small locally irregular subgraph
// (a claw, or a claw with two edges subdivided) leaving only even-size
// components. Returns nullopt exactly when g is exceptional.
std::optional<OddReduction> reduce_odd_size(const Graph& g);

}  // namespace liri
