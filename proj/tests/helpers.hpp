#pragma once

#include <vector>

#include "liri/graph.hpp"

namespace helpers {

// path 0-1-...-n with n edges
inline liri::Graph path_graph(int n) {
    std::vector<liri::Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, i + 1);
    return liri::Graph::from_edges(e);
}

inline liri::Graph cycle_graph(int n) {
    std::vector<liri::Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 1);
    return liri::Graph::from_edges(e);
}

inline liri::Graph complete_graph(int n) {
    std::vector<liri::Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return liri::Graph::from_edges(e);
}

// sides 0..a-1 and a..a+b-1
inline liri::Graph complete_bipartite(int a, int b) {
    std::vector<liri::Edge> e;
    for (int i = 0; i < a; ++i)
        for (int j = a; j < a + b; ++j) e.emplace_back(i, j);
    return liri::Graph::from_edges(e);
}

inline liri::Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

}  // namespace helpers
