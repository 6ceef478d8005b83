#include "liri/parity.hpp"

#include <algorithm>

#include "liri/irregularity.hpp"
#include "liri/structure.hpp"

namespace liri {

Edge find_even_parity_edge(const Graph& g, int v) {
    if (!is_connected(g)) throw precondition_error("find_even_parity_edge: g must be connected");
    if (!g.odd_size()) throw precondition_error("find_even_parity_edge: g must have odd size");
    if (!g.has_vertex(v) || g.degree(v) < 1)
        throw precondition_error("find_even_parity_edge: v must have an incident edge");
    EdgeSet cut = bridges(g);
    for (const Edge& e : incident_edges(g, v))
        if (!cut.count(e)) return e;
    for (const Edge& e : incident_edges(g, v)) {
        Graph far = component_of(g.minus_edge(e), e.other(v));
        if (far.size() % 2 == 0) return e;
    }
    throw internal_error("find_even_parity_edge: no valid edge (parity argument failed)");
}

std::pair<Edge, Edge> find_even_parity_path2(const Graph& g, int v) {
    if (!is_connected(g)) throw precondition_error("find_even_parity_path2: g must be connected");
    if (g.size() % 2 != 0 || g.size() < 2)
        throw precondition_error("find_even_parity_path2: g must have even size >= 2");
    if (!g.has_vertex(v) || g.degree(v) < 1)
        throw precondition_error("find_even_parity_path2: v must have an incident edge");
    Edge e = incident_edges(g, v).front();
    Graph rest = g.minus_edge(e);
    // exactly one odd component; e has an endpoint in it
    int u = -1;
    for (int cand : {std::min(e.u, e.v), std::max(e.u, e.v)}) {
        if (component_of(rest, cand).odd_size()) {
            u = cand;
            break;
        }
    }
    if (u < 0) throw internal_error("find_even_parity_path2: no odd component at e");
    Edge f = find_even_parity_edge(component_of(rest, u), u);
    return {e, f};
}

namespace {

bool is_cutvertex(const Graph& g, int v) {
    return components(g.minus_vertex(v)).size() > components(g).size();
}

// Certify a candidate removal: h locally irregular, remainder all even.
std::optional<OddReduction> certify(const Graph& g, const EdgeSet& h_edges) {
    for (const Edge& e : h_edges)
        if (!g.has_edge(e)) return std::nullopt;
    Graph h = Graph::from_edges(h_edges);
    if (!is_locally_irregular(h)) return std::nullopt;
    Graph rest = g.minus_edges(h_edges);
    if (!all_components_even(rest)) return std::nullopt;
    return OddReduction{h, rest};
}

// All 3-subsets of edges at v, lexicographic order.
std::optional<OddReduction> try_claws_at(const Graph& g, int v) {
    auto es = incident_edges(g, v);
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j)
            for (std::size_t k = j + 1; k < es.size(); ++k)
                if (auto r = certify(g, {es[i], es[j], es[k]})) return r;
    return std::nullopt;
}

std::optional<OddReduction> try_cycle_vertex(const Graph& g, int v) {
    auto cyc = shortest_cycle_through(g, v);
    if (!cyc) return std::nullopt;
    const auto& c = *cyc;
    std::size_t len = c.size();
    Edge ec1(v, c[1]), ec2(v, c[len - 1]);
    Graph g2 = g.minus_edges({ec1, ec2});
    if (is_connected(g2)) {
        Edge e = find_even_parity_edge(g2, v);
        if (auto r = certify(g, {ec1, ec2, e})) return r;
        return std::nullopt;
    }
    Graph gc = component_of(g2, v);
    if (gc.odd_size()) {
        Edge e = find_even_parity_edge(gc, v);
        if (auto r = certify(g, {ec1, ec2, e})) return r;
        return std::nullopt;
    }
    if (gc.size() < 2) return std::nullopt;
    auto [e, f] = find_even_parity_path2(gc, v);
    bool v_middle = e.touches(v) && f.touches(v);
    if (v_middle) {
        for (const Edge& ec : {std::min(ec1, ec2), std::max(ec1, ec2)})
            if (auto r = certify(g, {e, f, ec})) return r;
        return std::nullopt;
    }
    if (len >= 4) {
        // path of length 3 along C with v internal, both directions
        Edge pc_a(c[len - 1], c[len - 2]);
        Edge pc_b(c[1], c[2]);
        for (const Edge& third : {pc_b, pc_a})
            if (auto r = certify(g, {e, f, ec1, ec2, third})) return r;
    }
    return std::nullopt;
}

std::optional<OddReduction> try_two_triangles(const Graph& g, int v) {
    auto tris = triangles(g);
    std::vector<std::array<int, 3>> at_v;
    for (const auto& t : tris)
        if (t[0] == v || t[1] == v || t[2] == v) at_v.push_back(t);
    for (std::size_t i = 0; i < at_v.size(); ++i) {
        for (std::size_t j = i + 1; j < at_v.size(); ++j) {
            std::vector<Edge> c1, c2;
            for (int x : at_v[i])
                if (x != v) c1.push_back(Edge(v, x));
            for (int x : at_v[j])
                if (x != v) c2.push_back(Edge(v, x));
            for (const Edge& e1 : c1) {
                for (const Edge& e2 : c2) {
                    if (e1 == e2) continue;
                    Graph g2 = g.minus_edges({e1, e2});
                    if (!is_connected(g2)) continue;
                    Edge e3 = find_even_parity_edge(g2, v);
                    if (auto r = certify(g, {e1, e2, e3})) return r;
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<OddReduction> try_independent_double_path(const Graph& g, int v) {
    Edge uv = find_even_parity_edge(g, v);
    int u = uv.other(v);
    auto nbrs = g.neighbors(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
            int u1 = nbrs[i], u2 = nbrs[j];
            if (u1 == u || u2 == u) continue;
            if (g.has_edge(u, u1) || g.has_edge(u, u2) || g.has_edge(u1, u2)) continue;
            Graph gp = g.minus_edge(uv);
            Edge e1v(u1, v), e2v(u2, v);

            auto odd_side = [&](const Edge& ev) {
                Graph h = gp.minus_edge(ev);
                Graph side = component_of(h, ev.other(v));
                if (side.odd_size()) return side;
                return component_of(h, v);
            };
            Graph g1 = odd_side(e1v);
            if (g1.has_vertex(v)) {
                Edge e = find_even_parity_edge(g1, v);
                if (auto r = certify(g, {uv, e1v, e})) return r;
                continue;
            }
            Graph g2 = odd_side(e2v);
            if (g2.has_vertex(v)) {
                Edge e = find_even_parity_edge(g2, v);
                if (auto r = certify(g, {uv, e2v, e})) return r;
                continue;
            }
            Edge e1 = find_even_parity_edge(g1, u1);
            Edge e2 = find_even_parity_edge(g2, u2);
            if (auto r = certify(g, {uv, e1v, e2v, e1, e2})) return r;
        }
    }
    return std::nullopt;
}

// Exhaustive fallback over the two admissible shapes.
std::optional<OddReduction> try_exhaustive(const Graph& g) {
    for (int v : g.vertices()) {
        if (g.degree(v) < 3) continue;
        if (auto r = try_claws_at(g, v)) return r;
    }
    for (int v : g.vertices()) {
        if (g.degree(v) < 3) continue;
        auto nbrs = g.neighbors(v);
        for (int a : nbrs) {
            for (std::size_t i = 0; i < nbrs.size(); ++i) {
                for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                    int x1 = nbrs[i], x2 = nbrs[j];
                    if (x1 == a || x2 == a) continue;
                    for (int y1 : g.neighbors(x1)) {
                        if (y1 == v || y1 == a || y1 == x2) continue;
                        for (int y2 : g.neighbors(x2)) {
                            if (y2 == v || y2 == a || y2 == x1 || y2 == y1) continue;
                            if (auto r = certify(g, {Edge(v, a), Edge(v, x1), Edge(x1, y1),
                                                     Edge(v, x2), Edge(x2, y2)}))
                                return r;
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<OddReduction> reduce_odd_size(const Graph& g) {
    if (!is_connected(g)) throw precondition_error("reduce_odd_size: g must be connected");
    if (!g.odd_size()) throw precondition_error("reduce_odd_size: g must have odd size");
    if (is_exceptional(g)) return std::nullopt;

    for (int v : g.vertices())
        if (g.degree(v) >= 3 && !is_cutvertex(g, v))
            if (auto r = try_claws_at(g, v)) return r;
    for (int v : g.vertices())
        if (g.degree(v) >= 3)
            if (auto r = try_cycle_vertex(g, v)) return r;
    for (int v : g.vertices())
        if (g.degree(v) >= 3)
            if (auto r = try_two_triangles(g, v)) return r;
    for (int v : g.vertices())
        if (g.degree(v) >= 3)
            if (auto r = try_independent_double_path(g, v)) return r;
    if (auto r = try_exhaustive(g)) return r;
    throw internal_error("reduce_odd_size: no removal found for a non-exceptional graph");
}

}  // namespace liri
