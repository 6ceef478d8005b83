#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liri/graph.hpp"

namespace liri {

// A partition of a graph's edges into classes 1..k. Classes may be empty;
// class_count() counts only nonempty classes.
struct Decomposition {
    Graph graph;
    std::map<Edge, int> color;

    int class_count() const;
    // Subgraph induced by the edges of one class.
    Graph class_graph(int c) const;
    std::vector<int> classes_used() const;  // sorted, nonempty classes

    // Text format: one line "u v c" per edge, class index c >= 1.
    static Decomposition parse(const Graph& g, const std::string& text);
    std::string serialize() const;
};

struct Violation {
    int cls;
    Edge edge;
    int deg_u;
    int deg_v;
};

struct Certificate {
    bool valid = false;
    int class_count = 0;
    std::vector<Violation> violations;
    std::optional<int> max_classes;  // bound requested, if any
};

bool is_locally_irregular(const Graph& g);

// Checks that every nonempty class induces a locally irregular subgraph and
// that class_count stays within max_classes when given. Throws
// precondition_error on an uncolored edge or a class index < 1.
Certificate verify(const Decomposition& d, std::optional<int> max_classes = std::nullopt);

enum class ExceptionalReason { No, OddPath, OddCycle, FamilyT };

// Recognizes connected graphs admitting no decomposition into locally
// irregular subgraphs: odd paths, odd cycles, and triangle-tree graphs whose
// degree-2 chains have odd length exactly when both chain ends lie on
// triangles. Requires g connected.
ExceptionalReason exceptional_reason(const Graph& g);
bool is_exceptional(const Graph& g);

}  // namespace liri
