#pragma once

#include <optional>
#include <vector>

#include "liri/graph.hpp"
#include "liri/irregularity.hpp"

namespace liri {

struct ChiResult {
    enum class Status { Found, Exceptional, LimitReached };
    Status status = Status::LimitReached;
    int k = 0;                             // set when status == Found
    std::optional<Decomposition> witness;  // set when status == Found

    bool found() const { return status == Status::Found; }
    bool exceptional() const { return status == Status::Exceptional; }
};

// Least k <= limit admitting a locally irregular k-edge-coloring, by
// exhaustive backtracking. Search up to max(1, |E|/2) classes is complete
// (single-edge classes are never locally irregular), so Exceptional is
// reported when the limit covers that bound and nothing was found;
// otherwise LimitReached. Requires g connected and |E| <= size_guard.
ChiResult chi_irr_exact(const Graph& g, int limit, std::size_t size_guard = 25);

// All connected simple graphs on n vertices up to isomorphism (n <= 7),
// deduplicated by minimum adjacency encoding over all vertex permutations.
std::vector<Graph> enumerate_connected_graphs(int n);

}  // namespace liri
