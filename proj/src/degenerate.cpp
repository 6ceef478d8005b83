#include "liri/degenerate.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "liri/bipartite.hpp"
#include "liri/parity.hpp"
#include "liri/structure.hpp"

namespace liri {

namespace {

Graph graph_union(const Graph& a, const Graph& b) {
    std::vector<int> verts = a.vertices();
    verts.insert(verts.end(), b.vertices().begin(), b.vertices().end());
    std::vector<Edge> edges = a.edges();
    edges.insert(edges.end(), b.edges().begin(), b.edges().end());
    return Graph(std::move(verts), std::move(edges));
}

int ceil_log2(long long x) {  // smallest k with 2^k >= x, x >= 1
    return static_cast<int>(std::bit_width(static_cast<unsigned long long>(x - 1)));
}

}  // namespace

int degenerate_part_bound(long long d) { return ceil_log2(d + 1) + 1; }

long long general_chi_bound_even(long long d) { return 3 + 9LL * degenerate_part_bound(2 * d); }

long long general_chi_bound(long long d) { return general_chi_bound_even(d) + 1; }

bool even_bipartite_family_ok(const Graph& g, const EvenBipartiteFamily& parts) {
    EdgeSet seen;
    for (const Graph& p : parts) {
        for (const Edge& e : p.edges()) {
            if (!g.has_edge(e) || !seen.insert(e).second) return false;
        }
        if (!is_bipartite(p) || !all_components_even(p)) return false;
    }
    return seen.size() == g.size();
}

EdgeSet halve_neighbors(const Graph& g, int v) {
    if (!g.has_vertex(v)) throw precondition_error("halve_neighbors: no such vertex");
    Graph gm = g.minus_vertex(v);
    auto b = try_bipartition(gm);
    if (!b) throw precondition_error("halve_neighbors: g - v is not bipartite");
    EdgeSet out;
    for (const auto& comp : components(gm)) {
        std::set<int> vs(comp.vertices.begin(), comp.vertices.end());
        std::vector<int> na, nb;
        for (int u : g.neighbors(v)) {
            if (!vs.count(u)) continue;
            (b->in_a(u) ? na : nb).push_back(u);
        }
        const std::vector<int>& minority = (na.size() <= nb.size()) ? na : nb;
        for (int u : minority) out.insert(Edge(v, u));
    }
    return out;
}

EdgeSet halve_neighbors_exact(const Graph& g, int v, int target,
                              std::optional<int> keep_vertex) {
    EdgeSet e = halve_neighbors(g, v);
    if (static_cast<int>(e.size()) > target)
        throw precondition_error("halve_neighbors_exact: target below the minority count");
    std::set<int> keep_comp;
    if (keep_vertex) {
        Graph side = component_of(g.minus_vertex(v), *keep_vertex);
        keep_comp.insert(side.vertices().begin(), side.vertices().end());
    }
    auto into_keep = [&](const Edge& ed) { return keep_comp.count(ed.other(v)) > 0; };
    int keep_left = 0;
    for (const Edge& ed : incident_edges(g, v))
        if (into_keep(ed) && !e.count(ed)) keep_left++;
    for (const Edge& ed : incident_edges(g, v)) {
        if (static_cast<int>(e.size()) >= target) break;
        if (e.count(ed)) continue;
        if (into_keep(ed) && keep_left == 1) continue;
        if (into_keep(ed)) keep_left--;
        e.insert(ed);
    }
    if (static_cast<int>(e.size()) != target)
        throw precondition_error("halve_neighbors_exact: cannot reach target");
    return e;
}

namespace {

// a and b joined by an odd-length path inside the bipartite part
bool odd_path_between(const Graph& part, int a, int b) {
    if (!part.has_vertex(a) || !part.has_vertex(b) || a == b) return false;
    if (!shortest_path(part, a, b)) return false;
    auto bp = try_bipartition(part);
    if (!bp) throw precondition_error("odd_path_between: part is not bipartite");
    return bp->in_a(a) != bp->in_a(b);
}

bool even_path_between(const Graph& part, int a, int b) {
    if (a == b) return true;
    if (!part.has_vertex(a) || !part.has_vertex(b)) return false;
    if (!shortest_path(part, a, b)) return false;
    auto bp = try_bipartition(part);
    if (!bp) throw precondition_error("even_path_between: part is not bipartite");
    return bp->in_a(a) == bp->in_a(b);
}

Graph add_vertex_edges(const Graph& base, int v, const std::vector<Edge>& ve) {
    std::vector<int> verts = base.vertices();
    verts.push_back(v);
    std::vector<Edge> edges = base.edges();
    for (const Edge& e : ve) {
        verts.push_back(e.other(v));
        edges.push_back(e);
    }
    return Graph(std::move(verts), std::move(edges));
}

}  // namespace

EvenBipartiteFamily extend_even_bipartite(const Graph& g, int v, EvenBipartiteFamily family,
                                          int ell) {
    if (!g.has_vertex(v)) throw precondition_error("extend_even_bipartite: no such vertex");
    int d = g.degree(v);
    if (d % 2 != 0) throw precondition_error("extend_even_bipartite: deg(v) must be even");
    while (static_cast<int>(family.size()) < ell) family.push_back(Graph());
    if (static_cast<int>(family.size()) != ell)
        throw precondition_error("extend_even_bipartite: more than ell parts");
    if (!even_bipartite_family_ok(g.minus_vertex(v), family))
        throw precondition_error("extend_even_bipartite: family does not cover g - v");
    if (d == 0) return family;
    if (ell < ceil_log2(d) + 1)
        throw precondition_error("extend_even_bipartite: ell too small for deg(v)");

    if (d == 2) {
        int u1 = g.neighbors(v)[0], u2 = g.neighbors(v)[1];
        Edge e1(v, u1), e2(v, u2);
        auto attach = [&](const EvenBipartiteFamily& base, int i,
                          int j) -> std::optional<EvenBipartiteFamily> {
            EvenBipartiteFamily cand = base;
            cand[i] = cand[i].with_edge(e1);
            cand[j] = cand[j].with_edge(e2);
            if (even_bipartite_family_ok(g, cand)) return cand;
            return std::nullopt;
        };
        for (int i = 0; i < ell; ++i) {
            if (!odd_path_between(family[i], u1, u2)) {
                if (auto r = attach(family, i, i)) return *r;
            }
        }
        // both lead parts have odd u1-u2 paths: move one edge of the color-2
        // path to color 1 at the first spot where that keeps color 1 bipartite
        EvenBipartiteFamily flipped = family;
        if (auto p = shortest_path(family[1], u1, u2)) {
            for (std::size_t i = 0; i + 1 < p->size(); ++i) {
                if (!even_path_between(family[0], (*p)[i], (*p)[i + 1])) {
                    Edge flip((*p)[i], (*p)[i + 1]);
                    flipped[0] = flipped[0].with_edge(flip);
                    flipped[1] = flipped[1].minus_edge(flip);
                    break;
                }
            }
        }
        if (auto r = attach(flipped, 0, 1)) return *r;
        if (auto r = attach(flipped, 1, 0)) return *r;
        for (const auto& base : {flipped, family})
            for (int i = 0; i < ell; ++i)
                for (int j = 0; j < ell; ++j)
                    if (auto r = attach(base, i, j)) return *r;
        throw internal_error("extend_even_bipartite: no valid attachment for deg 2");
    }

    int dp = (d % 4 == 0) ? d / 2 : d / 2 + 1;
    Graph gh = add_vertex_edges(family[0], v, incident_edges(g, v));
    EdgeSet e = halve_neighbors_exact(gh, v, dp);
    Graph part0 = gh.minus_edges(e);
    EvenBipartiteFamily rest(family.begin() + 1, family.end());
    Graph rest_union;
    for (const Graph& p : rest) rest_union = graph_union(rest_union, p);
    Graph gprime = add_vertex_edges(rest_union, v, std::vector<Edge>(e.begin(), e.end()));
    EvenBipartiteFamily out = extend_even_bipartite(gprime, v, std::move(rest), ell - 1);
    out.insert(out.begin(), part0);
    if (!even_bipartite_family_ok(g, out))
        throw internal_error("extend_even_bipartite: invalid family after recursion");
    return out;
}

namespace {

EvenBipartiteFamily dde_rec(const Graph& g, int d, int ell);

// grouping of the components of g - v into two sides with >= 2 vertices each
std::optional<std::set<int>> big_separation_side(const Graph& g, int v) {
    auto comps = components(g.minus_vertex(v));
    if (comps.size() < 2) return std::nullopt;
    std::size_t total = 0, largest = 0, li = 0;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        total += comps[i].vertices.size();
        if (comps[i].vertices.size() > largest) {
            largest = comps[i].vertices.size();
            li = i;
        }
    }
    std::set<int> side;
    if (largest >= 2 && total - largest >= 2) {
        side.insert(comps[li].vertices.begin(), comps[li].vertices.end());
        return side;
    }
    if (largest == 1 && comps.size() >= 4) {
        side.insert(comps[0].vertices.begin(), comps[0].vertices.end());
        side.insert(comps[1].vertices.begin(), comps[1].vertices.end());
        return side;
    }
    return std::nullopt;
}

EvenBipartiteFamily merge_families(const EvenBipartiteFamily& a, const EvenBipartiteFamily& b) {
    EvenBipartiteFamily out;
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(graph_union(a[i], b[i]));
    return out;
}

std::size_t part_with_edge(const EvenBipartiteFamily& fam, const Edge& e) {
    for (std::size_t i = 0; i < fam.size(); ++i)
        if (fam[i].has_edge(e)) return i;
    throw internal_error("part_with_edge: edge missing from family");
}

EvenBipartiteFamily dde_connected(const Graph& g, int d, int ell) {
    // split-and-merge at a cut vertex with >= 2 vertices on both sides
    for (int v : g.vertices()) {
        auto side = big_separation_side(g, v);
        if (!side) continue;
        std::set<int> v1 = *side, v2;
        for (int x : g.vertices())
            if (x != v && !v1.count(x)) v2.insert(x);
        v1.insert(v);
        v2.insert(v);
        Graph g1 = g.induced(v1), g2 = g.induced(v2);
        if (g1.size() % 2 == 0) {
            return merge_families(dde_rec(g1, d, ell), dde_rec(g2, d, ell));
        }
        int w = g.vertices().back() + 1;
        Edge aux(v, w);
        EvenBipartiteFamily f1 = dde_rec(g1.with_edge(aux), d, ell);
        EvenBipartiteFamily f2 = dde_rec(g2.with_edge(aux), d, ell);
        std::size_t i1 = part_with_edge(f1, aux), i2 = part_with_edge(f2, aux);
        std::swap(f2[i1], f2[i2]);
        for (auto* f : {&f1, &f2}) {
            (*f)[i1] = (*f)[i1].minus_edge(aux);
            for (Graph& p : *f)
                if (p.has_vertex(w)) p = p.minus_vertex(w);
        }
        return merge_families(f1, f2);
    }

    // v: minimum degree among vertices of degree >= 2
    int v = -1;
    for (int x : g.vertices())
        if (g.degree(x) >= 2 && (v < 0 || g.degree(x) < g.degree(v))) v = x;
    if (v < 0) throw internal_error("dde_connected: graph of max degree 1 with even components");
    int dv = g.degree(v);

    if (dv % 2 == 0) {
        Graph gm = g.minus_vertex(v);
        if (!all_components_even(gm))
            throw internal_error("dde_connected: odd component after removing an even vertex");
        return extend_even_bipartite(g, v, dde_rec(gm, d, ell), ell);
    }

    int u = -1;
    for (int x : g.neighbors(v))
        if (g.degree(x) > 1) {
            u = x;
            break;
        }
    if (u < 0) throw internal_error("dde_connected: odd star of even size");
    Graph gm = g.minus_vertex(v);
    int w = -1;
    bool fresh = false;
    for (int x : gm.vertices())
        if (gm.degree(x) == 0) {
            w = x;
            break;
        }
    if (w < 0) {
        w = std::max(g.vertices().back(), u) + 1;
        fresh = true;
    }
    Edge aux(u, w);
    Graph gstar = gm.with_edge(aux);
    if (!all_components_even(gstar))
        throw internal_error("dde_connected: auxiliary graph has odd components");
    EvenBipartiteFamily fam = dde_rec(gstar, d, ell);
    std::size_t hi = part_with_edge(fam, aux);
    Graph h = fam[hi].minus_edge(aux);
    if (fresh && h.has_vertex(w)) h = h.minus_vertex(w);
    if (fresh)
        for (Graph& p : fam)
            if (p.has_vertex(w)) p = p.minus_vertex(w);

    int dp = (dv % 4 == 1) ? (dv - 1) / 2 : (dv + 1) / 2;
    Graph gh = add_vertex_edges(h, v, incident_edges(g, v));
    EdgeSet e = halve_neighbors_exact(gh, v, dp, u);
    Graph part_h = gh.minus_edges(e);
    if (!all_components_even(part_h) || !is_bipartite(part_h))
        throw internal_error("dde_connected: bad part after edge surgery");

    EvenBipartiteFamily rest;
    Graph rest_union;
    for (std::size_t i = 0; i < fam.size(); ++i) {
        if (i == hi) continue;
        rest.push_back(fam[i]);
        rest_union = graph_union(rest_union, fam[i]);
    }
    Graph gprime = add_vertex_edges(rest_union, v, std::vector<Edge>(e.begin(), e.end()));
    EvenBipartiteFamily out = extend_even_bipartite(gprime, v, std::move(rest), ell - 1);
    out.insert(out.begin() + hi, part_h);
    return out;
}

EvenBipartiteFamily dde_rec(const Graph& g, int d, int ell) {
    EvenBipartiteFamily out(ell);
    if (g.size() == 0) return out;
    auto comps = components(g);
    if (comps.size() == 1) return dde_connected(g, d, ell);
    for (const auto& comp : comps) {
        if (comp.edge_count == 0) continue;
        std::set<int> vs(comp.vertices.begin(), comp.vertices.end());
        out = merge_families(out, dde_rec(g.induced(vs), d, ell));
    }
    return out;
}

}  // namespace

EvenBipartiteFamily decompose_degenerate_even(const Graph& g, int d) {
    if (d < 1) throw precondition_error("decompose_degenerate_even: d must be >= 1");
    if (degeneracy_order(g).degeneracy > d)
        throw precondition_error("decompose_degenerate_even: g is not d-degenerate");
    if (!all_components_even(g))
        throw precondition_error("decompose_degenerate_even: odd-size component");
    int ell = degenerate_part_bound(d);
    EvenBipartiteFamily out = dde_rec(g, d, ell);
    if (!even_bipartite_family_ok(g, out))
        throw internal_error("decompose_degenerate_even: invalid family");
    return out;
}

Decomposition chi_bound_degenerate(const Graph& g, int d) {
    if (g.size() == 0) {
        Decomposition dec;
        dec.graph = g;
        return dec;
    }
    if (!is_connected(g)) throw precondition_error("chi_bound_degenerate: g must be connected");
    if (g.odd_size()) throw precondition_error("chi_bound_degenerate: g must have even size");
    EvenBipartiteFamily fam = decompose_degenerate_even(g, d);
    Decomposition dec;
    dec.graph = g;
    for (std::size_t i = 0; i < fam.size(); ++i) {
        for (const auto& comp : components(fam[i])) {
            if (comp.edge_count == 0) continue;
            std::set<int> vs(comp.vertices.begin(), comp.vertices.end());
            for (const auto& [e, c] : decompose_bipartite_even(fam[i].induced(vs)).color)
                dec.color[e] = c + 9 * static_cast<int>(i);
        }
    }
    if (dec.color.size() != g.size()) throw internal_error("chi_bound_degenerate: missed edges");
    return dec;
}

std::pair<Graph, Graph> split_degenerate_min_degree(const Graph& g, int d) {
    if (!is_connected(g))
        throw precondition_error("split_degenerate_min_degree: g must be connected");
    if (d < 1) throw precondition_error("split_degenerate_min_degree: d must be >= 1");
    Graph h = g;
    while (true) {
        int pick = -1;
        for (int x : h.vertices()) {
            if (h.degree(x) <= 2 * d) {
                pick = x;
                break;
            }
        }
        if (pick < 0) break;
        h = h.minus_vertex(pick);
    }
    if (h.size() == 0 && g.odd_size())
        throw precondition_error(
            "split_degenerate_min_degree: odd component cannot be repaired"
            " (even size required)");
    if (h.size() > 0) {
        std::map<int, std::vector<int>> outs;
        for (const auto& [t, hd] : almost_balanced_orientation(h).arcs) outs[t].push_back(hd);
        Graph dpart = g.minus_edges(h.edge_set());
        std::set<int> hverts(h.vertices().begin(), h.vertices().end());
        for (const auto& comp : components(dpart)) {
            if (comp.even()) continue;
            int v = -1;
            for (int x : comp.vertices) {
                if (hverts.count(x)) {
                    v = x;
                    break;
                }
            }
            if (v < 0)
                throw precondition_error(
                    "split_degenerate_min_degree: odd component cannot be repaired"
                    " (even size required)");
            // move the out-edge whose head keeps the most residual degree
            int best = -1;
            for (int hd : outs[v]) {
                if (!h.has_edge(v, hd)) continue;
                if (best < 0 || h.degree(hd) > h.degree(best)) best = hd;
            }
            if (best < 0)
                throw internal_error("split_degenerate_min_degree: no out-edge available");
            h = h.minus_edge(Edge(v, best));
        }
    }
    Graph dpart = g.minus_edges(h.edge_set());
    Graph hpart = g.edge_subgraph(h.edge_set());
    if (!all_components_even(dpart))
        throw internal_error("split_degenerate_min_degree: odd component left in D");
    if (degeneracy_order(dpart).degeneracy > 2 * d)
        throw internal_error("split_degenerate_min_degree: D exceeds 2d-degeneracy");
    if (hpart.order() > 0 && hpart.min_degree() < d)
        throw internal_error("split_degenerate_min_degree: H fell below minimum degree");
    return {dpart, hpart};
}

namespace {

Decomposition decompose_general_even(const Graph& g, const HighDegreeDecomposer& plugin) {
    auto [dpart, hpart] = split_degenerate_min_degree(g, plugin.threshold);
    Decomposition dec;
    dec.graph = g;
    if (hpart.size() > 0) {
        Decomposition dh = plugin.decompose(hpart);
        if (dh.class_count() > 3)
            throw internal_error("decompose_general: plugin used more than 3 classes");
        for (const auto& [e, c] : dh.color) dec.color[e] = c;
    }
    for (const auto& comp : components(dpart)) {
        if (comp.edge_count == 0) continue;
        std::set<int> vs(comp.vertices.begin(), comp.vertices.end());
        for (const auto& [e, c] :
             chi_bound_degenerate(dpart.induced(vs), 2 * plugin.threshold).color)
            dec.color[e] = c + 3;
    }
    if (dec.color.size() != g.size()) throw internal_error("decompose_general: missed edges");
    return dec;
}

}  // namespace

Decomposition decompose_general(const Graph& g, const HighDegreeDecomposer& plugin) {
    if (!is_connected(g)) throw precondition_error("decompose_general: g must be connected");
    if (!plugin.decompose) throw precondition_error("decompose_general: plugin required");
    if (is_exceptional(g)) throw precondition_error("decompose_general: exceptional input");
    if (!g.odd_size()) return decompose_general_even(g, plugin);
    auto red = reduce_odd_size(g);
    if (!red) throw internal_error("decompose_general: reduction failed");
    Decomposition dec;
    dec.graph = g;
    int hclass = static_cast<int>(general_chi_bound_even(plugin.threshold)) + 1;
    for (const Edge& e : red->removed.edges()) dec.color[e] = hclass;
    for (const auto& comp : components(red->rest)) {
        if (comp.edge_count == 0) continue;
        std::set<int> vs(comp.vertices.begin(), comp.vertices.end());
        for (const auto& [e, c] : decompose_general_even(red->rest.induced(vs), plugin).color)
            dec.color[e] = c;
    }
    if (dec.color.size() != g.size()) throw internal_error("decompose_general: missed edges");
    return dec;
}

}  // namespace liri
