#pragma once

#include <map>
#include <optional>

#include "liri/graph.hpp"
#include "liri/irregularity.hpp"
#include "liri/structure.hpp"

namespace liri {

// Prescribed degree residues: a spanning subgraph H is a witness when
// deg_H(v) == f(v) (mod k) at every vertex.
struct ResidueTarget {
    int k = 2;
    std::map<int, int> f;  // vertex -> residue in 0..k-1
};

// f must be defined on every vertex of g. True iff the two class sums of f
// are congruent mod k; for a connected bipartite graph this is necessary for
// a witness to exist (both class sums of deg_H equal |E(H)|).
bool residue_balance_check(const Graph& g, const Bipartition& b, const ResidueTarget& t);

struct FactorOptions {
    long long budget = 1'000'000;  // edge toggles across all restarts
    int restarts = 20;
    unsigned seed = 1;
};

enum class FactorStatus {
    Found,              // witness edges set
    InfeasibleBalance,  // definitive: some bipartite component fails the balance check
    NotFound,           // search exhausted its budget; inconclusive
};

struct FactorResult {
    FactorStatus status = FactorStatus::NotFound;
    EdgeSet edges;

    bool found() const { return status == FactorStatus::Found; }
};

// Find a spanning subgraph whose degrees match t modulo t.k. Exhaustive over
// edge subsets when g has at most 20 edges; otherwise a seeded local search
// minimizing the total circular residue defect, with defect-reducing edge
// toggles and path-toggle kicks between defective vertices.
FactorResult mod_k_factor(const Graph& g, const ResidueTarget& t, const FactorOptions& opts = {});

// Two-class decomposition of a bipartite graph with edge connectivity >= 16.
// Either the graph is nearly complete bipartite (every vertex misses at most
// one vertex of the other class) and two stars are split off directly, or a
// mod-6 residue target built from the degree parities is handed to
// mod_k_factor, with up to two rounds of +2 adjustments on class-B vertices
// to balance the class sums. Returns nullopt when the factor search fails
// within its budget. force skips the connectivity gate (success is then not
// guaranteed). Throws precondition_error when g is not bipartite or (without
// force) not 16-edge-connected.
std::optional<Decomposition> decompose_16ec_bipartite(const Graph& g, bool force = false,
                                                      const FactorOptions& opts = {});

}  // namespace liri
