#pragma once

#include <random>

#include "liri/graph.hpp"

namespace liri {

// Connected graph on vertices 0..n-1: a random spanning tree plus each
// remaining pair independently with probability p.
Graph random_connected_graph(std::mt19937& rng, int n, double p);

// Same graph with its edge count forced to the requested parity by toggling
// one pair (adds a missing edge, or removes a non-bridge when complete).
Graph random_connected_graph_parity(std::mt19937& rng, int n, double p, bool odd_size);

// Connected bipartite graph with sides 0..na-1 and na..na+nb-1, even size.
Graph random_connected_bipartite_even(std::mt19937& rng, int na, int nb, double p);

// d-degenerate graph on vertices 0..n-1 (possibly disconnected) in which
// every component has an even number of edges.
Graph random_degenerate_even(std::mt19937& rng, int n, int d, double p);

// Connected graph of odd size that admits a locally irregular decomposition.
Graph random_connected_odd_nonexceptional(std::mt19937& rng, int n, double p);

}  // namespace liri
