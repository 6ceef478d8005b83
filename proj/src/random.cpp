#include "liri/random.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "liri/irregularity.hpp"
#include "liri/structure.hpp"

namespace liri {

namespace {

Graph toggle_parity(std::mt19937& rng, const Graph& g, bool odd_size) {
    if (g.odd_size() == odd_size) return g;
    std::vector<int> vs = g.vertices();
    std::vector<Edge> missing;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j])) missing.emplace_back(vs[i], vs[j]);
    if (!missing.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, missing.size() - 1);
        return g.with_edge(missing[pick(rng)]);
    }
    std::vector<Edge> removable;
    for (const Edge& e : g.edges())
        if (!is_cut_edge(g, e)) removable.push_back(e);
    if (removable.empty()) throw internal_error("toggle_parity: nothing to toggle");
    std::uniform_int_distribution<std::size_t> pick(0, removable.size() - 1);
    return g.minus_edge(removable[pick(rng)]);
}

}  // namespace

Graph random_connected_graph(std::mt19937& rng, int n, double p) {
    if (n < 1) throw precondition_error("random_connected_graph: n must be positive");
    std::vector<int> verts(n);
    for (int i = 0; i < n; ++i) verts[i] = i;
    std::vector<Edge> edges;
    std::bernoulli_distribution coin(p);
    std::set<Edge> tree;
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> earlier(0, i - 1);
        tree.insert(Edge(earlier(rng), i));
    }
    edges.assign(tree.begin(), tree.end());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!tree.count(Edge(i, j)) && coin(rng)) edges.emplace_back(i, j);
    return Graph(std::move(verts), std::move(edges));
}

Graph random_connected_graph_parity(std::mt19937& rng, int n, double p, bool odd_size) {
    return toggle_parity(rng, random_connected_graph(rng, n, p), odd_size);
}

Graph random_connected_bipartite_even(std::mt19937& rng, int na, int nb, double p) {
    if (na < 1 || nb < 1)
        throw precondition_error("random_connected_bipartite_even: sides must be nonempty");
    std::vector<int> verts(na + nb);
    for (int i = 0; i < na + nb; ++i) verts[i] = i;
    auto side_a = [&](int v) { return v < na; };
    std::set<Edge> tree;
    tree.insert(Edge(0, na));
    // attach the remaining vertices to a random earlier vertex of the other side
    std::vector<int> placed = {0, na};
    std::vector<int> rest;
    for (int v = 1; v < na; ++v) rest.push_back(v);
    for (int v = na + 1; v < na + nb; ++v) rest.push_back(v);
    std::shuffle(rest.begin(), rest.end(), rng);
    for (int v : rest) {
        std::vector<int> other;
        for (int w : placed)
            if (side_a(w) != side_a(v)) other.push_back(w);
        std::uniform_int_distribution<std::size_t> pick(0, other.size() - 1);
        tree.insert(Edge(v, other[pick(rng)]));
        placed.push_back(v);
    }
    std::vector<Edge> edges(tree.begin(), tree.end());
    std::bernoulli_distribution coin(p);
    for (int a = 0; a < na; ++a)
        for (int b = na; b < na + nb; ++b)
            if (!tree.count(Edge(a, b)) && coin(rng)) edges.emplace_back(a, b);
    Graph g(std::move(verts), std::move(edges));
    if (!g.odd_size()) return g;
    std::vector<Edge> missing;
    for (int a = 0; a < na; ++a)
        for (int b = na; b < na + nb; ++b)
            if (!g.has_edge(a, b)) missing.emplace_back(a, b);
    if (!missing.empty()) {
        std::uniform_int_distribution<std::size_t> pick(0, missing.size() - 1);
        return g.with_edge(missing[pick(rng)]);
    }
    std::vector<Edge> removable;
    for (const Edge& e : g.edges())
        if (!is_cut_edge(g, e)) removable.push_back(e);
    if (removable.empty())
        throw internal_error("random_connected_bipartite_even: cannot fix parity");
    std::uniform_int_distribution<std::size_t> pick(0, removable.size() - 1);
    return g.minus_edge(removable[pick(rng)]);
}

Graph random_degenerate_even(std::mt19937& rng, int n, int d, double p) {
    if (n < 1 || d < 1) throw precondition_error("random_degenerate_even: bad parameters");
    std::vector<int> verts(n);
    for (int i = 0; i < n; ++i) verts[i] = i;
    std::vector<Edge> edges;
    std::bernoulli_distribution coin(p);
    // each vertex keeps at most d back-neighbours, so the order witnesses
    // d-degeneracy; back_deg tracks how many each vertex has used
    std::vector<int> back_deg(n + 1, 0);
    for (int i = 1; i < n; ++i) {
        std::vector<int> pool;
        for (int j = 0; j < i; ++j) pool.push_back(j);
        std::shuffle(pool.begin(), pool.end(), rng);
        for (int j : pool) {
            if (back_deg[i] >= d) break;
            if (coin(rng)) {
                edges.emplace_back(j, i);
                back_deg[i]++;
            }
        }
    }
    Graph g(verts, edges);
    // give each odd component a pendant edge to a fresh vertex; the fresh
    // vertex has one back-neighbour, so degeneracy is preserved
    int next = n;
    for (const auto& comp : components(g)) {
        if (comp.even()) continue;
        verts.push_back(next);
        edges.emplace_back(comp.vertices.front(), next);
        ++next;
    }
    Graph out(std::move(verts), std::move(edges));
    if (degeneracy_order(out).degeneracy > d || !all_components_even(out))
        throw internal_error("random_degenerate_even: repair failed");
    return out;
}

Graph random_connected_odd_nonexceptional(std::mt19937& rng, int n, double p) {
    for (int tries = 0; tries < 1000; ++tries) {
        Graph g = random_connected_graph_parity(rng, n, p, true);
        if (!is_exceptional(g)) return g;
    }
    throw internal_error("random_connected_odd_nonexceptional: too many rejections");
}

}  // namespace liri
