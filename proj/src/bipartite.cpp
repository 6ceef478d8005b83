#include "liri/bipartite.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "liri/parity.hpp"

namespace liri {

EdgeSet PathSystem::edge_union() const {
    EdgeSet es;
    for (const auto& p : paths)
        for (std::size_t i = 0; i + 1 < p.size(); ++i) es.insert(Edge(p[i], p[i + 1]));
    return es;
}

PathSystem path_system(const Graph& g, const std::set<int>& s) {
    if (!is_connected(g)) throw precondition_error("path_system: g must be connected");
    if (s.size() % 2 != 0) throw precondition_error("path_system: |s| must be even");
    for (int v : s)
        if (!g.has_vertex(v)) throw precondition_error("path_system: endpoint not in graph");
    PathSystem ps;
    ps.endpoints = s;
    if (s.empty()) return ps;

    // Tree edges separating an odd number of s-vertices form a forest whose
    // odd-degree vertices are exactly s.
    EdgeSet tree = spanning_tree(g);
    std::map<int, std::vector<int>> tadj;
    for (const Edge& e : tree) {
        tadj[e.u].push_back(e.v);
        tadj[e.v].push_back(e.u);
    }
    int root = g.vertices().front();
    std::map<int, int> parent;
    std::vector<int> order;
    parent[root] = -1;
    std::deque<int> q{root};
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        order.push_back(x);
        for (int y : tadj[x]) {
            if (!parent.count(y)) {
                parent[y] = x;
                q.push_back(y);
            }
        }
    }
    std::map<int, int> cnt;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        cnt[*it] += s.count(*it) ? 1 : 0;
        if (parent[*it] != -1) cnt[parent[*it]] += cnt[*it];
    }
    std::map<int, std::set<int>> adj;
    for (int x : order) {
        if (parent[x] != -1 && cnt[x] % 2 == 1) {
            adj[x].insert(parent[x]);
            adj[parent[x]].insert(x);
        }
    }

    // Split the forest into paths: walk from an odd-degree vertex until
    // arriving at a vertex that was odd-degree before arrival.
    while (true) {
        int start = -1;
        for (const auto& [x, ns] : adj) {
            if (ns.size() % 2 == 1) {
                start = x;
                break;
            }
        }
        if (start < 0) break;
        std::vector<int> path{start};
        int cur = start;
        while (true) {
            int nxt = *adj[cur].begin();
            adj[cur].erase(nxt);
            adj[nxt].erase(cur);
            path.push_back(nxt);
            cur = nxt;
            if (adj[cur].size() % 2 == 0) break;
        }
        ps.paths.push_back(std::move(path));
    }

    // Certify the postconditions.
    for (const auto& [x, ns] : adj)
        if (!ns.empty()) throw internal_error("path_system: leftover forest edges");
    std::map<int, int> used;
    for (const auto& p : ps.paths) {
        std::set<int> distinct(p.begin(), p.end());
        if (distinct.size() != p.size()) throw internal_error("path_system: non-simple path");
        used[p.front()]++;
        used[p.back()]++;
    }
    if (ps.paths.size() * 2 != s.size()) throw internal_error("path_system: wrong path count");
    for (int v : s)
        if (used[v] != 1) throw internal_error("path_system: endpoint multiplicity");
    std::map<int, int> fdeg;
    for (const Edge& e : ps.edge_union()) {
        fdeg[e.u]++;
        fdeg[e.v]++;
    }
    for (const auto& [x, d] : fdeg)
        if (d % 2 != (s.count(x) ? 1 : 0)) throw internal_error("path_system: parity defect");
    return ps;
}

namespace {

void flip_colors(std::map<Edge, int>& col) {
    for (auto& [e, c] : col) c = 3 - c;
}

// 2-coloring of a balanced tree: every b-side vertex monochromatic.
std::map<Edge, int> color_tree(const Graph& t, const std::set<int>& bcls) {
    std::map<Edge, int> col;
    if (t.size() == 0) return col;
    int v = -1;
    for (int x : t.vertices()) {
        if (!bcls.count(x) && t.degree(x) >= 2 && t.degree(x) % 2 == 0) {
            v = x;
            break;
        }
    }
    if (v < 0) {
        for (const Edge& e : t.edges()) col[e] = 1;
        return col;
    }
    // Split at v into one subtree per neighbor, recurse, then flip so that
    // exactly the smallest neighbor's edge at v is color 1.
    std::vector<std::pair<int, std::map<Edge, int>>> parts;
    for (const auto& comp : components(t.minus_vertex(v))) {
        std::set<int> vs(comp.vertices.begin(), comp.vertices.end());
        int nbr = -1;
        for (int y : t.neighbors(v))
            if (vs.count(y)) nbr = y;
        if (nbr < 0) throw internal_error("color_tree: split lost a neighbor");
        vs.insert(v);
        parts.emplace_back(nbr, color_tree(t.induced(vs), bcls));
    }
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 0; i < parts.size(); ++i) {
        auto& [nbr, sub] = parts[i];
        int want = (i == 0) ? 1 : 2;
        if (sub.at(Edge(v, nbr)) != want) flip_colors(sub);
        for (const auto& [e, c] : sub) col[e] = c;
    }
    return col;
}

}  // namespace

Decomposition color_balanced_forest(const BalancedForest& f) {
    const Graph& fg = f.forest;
    std::size_t comp_count = components(fg).size();
    if (fg.size() + comp_count != fg.order())
        throw precondition_error("color_balanced_forest: forest has a cycle");
    for (const Edge& e : fg.edges())
        if (f.even_class.count(e.u) == f.even_class.count(e.v))
            throw precondition_error("color_balanced_forest: even_class is not one side");
    for (int v : f.even_class) {
        if (!fg.has_vertex(v))
            throw precondition_error("color_balanced_forest: even_class vertex not in forest");
        if (fg.degree(v) % 2 != 0)
            throw precondition_error("color_balanced_forest: odd degree in even_class");
    }
    Decomposition d;
    d.graph = fg;
    for (const auto& comp : components(fg)) {
        if (comp.edge_count == 0) continue;
        std::set<int> vs(comp.vertices.begin(), comp.vertices.end());
        for (const auto& [e, c] : color_tree(fg.induced(vs), f.even_class)) d.color[e] = c;
    }
    return d;
}

namespace {

// Color a run of edges in blocks of two, alternating block colors a,b.
void color_blocks(std::map<Edge, int>& col, const std::vector<Edge>& seq, int a, int b) {
    if (seq.size() % 2 != 0) throw internal_error("color_blocks: odd run length");
    for (std::size_t i = 0; i < seq.size(); ++i) col[seq[i]] = ((i / 2) % 2 == 0) ? a : b;
}

std::vector<Edge> slice(const std::vector<Edge>& v, std::size_t a, std::size_t b) {
    if (a > b + 1) return {};
    return std::vector<Edge>(v.begin() + a, v.begin() + b + 1);
}

}  // namespace

Decomposition decompose_path_plus_cycle(const std::vector<int>& c, const std::vector<int>& p,
                                        int v) {
    std::size_t l = c.size();
    if (l < 4 || l % 2 != 0)
        throw precondition_error("decompose_path_plus_cycle: need an even cycle of length >= 4");
    if (c.front() != v || p.empty() || p.front() != v)
        throw precondition_error("decompose_path_plus_cycle: cycle and path must start at v");
    std::set<int> cset(c.begin(), c.end());
    if (cset.size() != l) throw precondition_error("decompose_path_plus_cycle: repeated cycle vertex");
    std::set<int> pset(p.begin(), p.end());
    if (pset.size() != p.size())
        throw precondition_error("decompose_path_plus_cycle: repeated path vertex");

    std::vector<Edge> ce, pe;
    for (std::size_t i = 0; i < l; ++i) ce.push_back(Edge(c[i], c[(i + 1) % l]));
    for (std::size_t i = 0; i + 1 < p.size(); ++i) pe.push_back(Edge(p[i], p[i + 1]));
    EdgeSet ces(ce.begin(), ce.end());
    for (const Edge& e : pe) {
        if (ces.count(e))
            throw precondition_error("decompose_path_plus_cycle: cycle and path share an edge");
        if (cset.count(e.u) && cset.count(e.v))
            throw precondition_error("decompose_path_plus_cycle: cycle not induced");
    }
    std::vector<Edge> all = ce;
    all.insert(all.end(), pe.begin(), pe.end());
    Graph g = Graph::from_edges(all);
    if (!is_bipartite(g)) throw precondition_error("decompose_path_plus_cycle: union not bipartite");

    std::size_t lp = pe.size();
    std::map<Edge, int> col;
    if (lp == 0) {
        if (l % 4 == 0) {
            color_blocks(col, ce, 1, 2);
        } else {
            color_blocks(col, slice(ce, 0, l - 3), 1, 2);
            col[ce[l - 2]] = 3;
            col[ce[l - 1]] = 3;
        }
    } else if (lp % 2 == 1) {
        // claw / two-armed spider at v takes the path's first edge
        col[pe[0]] = 1;
        col[ce[0]] = 1;
        col[ce[l - 1]] = 1;
        std::size_t a = 1, b = l - 2;
        if (l % 4 != 0) {
            col[ce[1]] = 1;
            col[ce[l - 2]] = 1;
            a = 2;
            b = l - 3;
        }
        color_blocks(col, slice(ce, a, b), 2, 1);
        color_blocks(col, slice(pe, 1, lp - 1), 3, 4);
    } else if (l % 4 == 0) {
        color_blocks(col, ce, 1, 2);
        color_blocks(col, pe, 3, 4);
    } else {
        // l congruent to 2 mod 4: pin the first two path edges and their
        // cycle neighbors to class 1, then fill the cycle arcs.
        col[pe[0]] = 1;
        col[pe[1]] = 1;
        col[ce[0]] = 1;
        col[ce[l - 1]] = 1;
        long m = -1;
        for (std::size_t i = 0; i < l; ++i)
            if (c[i] == p[2]) m = static_cast<long>(i);
        std::vector<std::pair<long, long>> segs;
        if (m < 0) {
            segs.push_back({1, static_cast<long>(l) - 2});
        } else {
            col[ce[m - 1]] = 1;
            col[ce[m]] = 1;
            segs.push_back({1, m - 2});
            segs.push_back({m + 1, static_cast<long>(l) - 2});
        }
        for (auto [a, b] : segs) {
            long len = b - a + 1;
            if (len <= 0) continue;
            if (len % 4 == 0) {
                // extend both adjacent class-1 arms by one edge
                col[ce[a]] = 1;
                col[ce[b]] = 1;
                ++a;
                --b;
            }
            color_blocks(col, slice(ce, a, b), 2, 1);
        }
        color_blocks(col, slice(pe, 2, lp - 1), 3, 4);
    }

    if (col.size() != all.size())
        throw internal_error("decompose_path_plus_cycle: template missed an edge");
    Decomposition d;
    d.graph = g;
    d.color = std::move(col);
    return d;
}

BalancedForest make_A_even(const Graph& g, const Bipartition& b) {
    if (g.odd_size()) throw precondition_error("make_A_even: g must have even size");
    std::set<int> s;
    for (int x : g.vertices())
        if (b.in_a(x) && g.degree(x) % 2 == 1) s.insert(x);
    PathSystem ps = path_system(g, s);
    BalancedForest f;
    f.forest = Graph::from_edges(ps.edge_union());
    for (int x : f.forest.vertices())
        if (!b.in_a(x)) f.even_class.insert(x);
    return f;
}

BalancedForest make_B_almost_odd(const Graph& g, const Bipartition& b, int v) {
    if (!g.has_vertex(v) || b.in_a(v))
        throw precondition_error("make_B_almost_odd: v must be a B-vertex of g");
    for (int x : g.vertices())
        if (b.in_a(x) && g.degree(x) % 2 == 1)
            throw precondition_error("make_B_almost_odd: A-degrees must be even");
    std::set<int> s;
    for (int x : g.vertices())
        if (!b.in_a(x) && g.degree(x) % 2 == 0) s.insert(x);
    if (s.size() % 2 == 1) {
        if (s.count(v))
            s.erase(v);
        else
            s.insert(v);
    }
    PathSystem ps = path_system(g, s);
    BalancedForest f;
    f.forest = Graph::from_edges(ps.edge_union());
    for (int x : f.forest.vertices())
        if (b.in_a(x)) f.even_class.insert(x);
    return f;
}

std::vector<int> delete_conflict_path(const Graph& g, const Bipartition& b, int v) {
    if (!g.has_vertex(v) || b.in_a(v))
        throw precondition_error("delete_conflict_path: v must be a B-vertex of g");
    for (int x : g.vertices()) {
        if (b.in_a(x)) {
            if (g.degree(x) % 2 == 1)
                throw precondition_error("delete_conflict_path: A-degrees must be even");
        } else if (x != v && g.degree(x) % 2 == 0) {
            throw precondition_error("delete_conflict_path: B-degrees off v must be odd");
        }
    }
    Graph h = g;
    std::vector<int> path{v};
    int cur = v;
    while (!is_locally_irregular(h)) {
        int next = -1;
        for (int y : h.neighbors(cur)) {
            if (h.degree(y) == h.degree(cur)) {
                next = y;
                break;
            }
        }
        if (next < 0) throw internal_error("delete_conflict_path: conflict away from the walk");
        h = h.minus_edge(Edge(cur, next));
        path.push_back(next);
        cur = next;
    }
    return path;
}

namespace {

void merge_colors(Decomposition& d, const std::map<Edge, int>& col, int offset) {
    for (const auto& [e, c] : col) d.color[e] = c + offset;
}

}  // namespace

Decomposition decompose_A_even(const Graph& g, const Bipartition& b, AEvenTrace* trace) {
    for (int x : g.vertices())
        if (b.in_a(x) && g.degree(x) % 2 == 1)
            throw precondition_error("decompose_A_even: A-degrees must be even");
    Decomposition d;
    d.graph = g;
    for (const auto& comp : components(g)) {
        if (comp.edge_count == 0) continue;
        std::set<int> vs(comp.vertices.begin(), comp.vertices.end());
        Graph cg = g.induced(vs);
        int v = -1;
        for (int x : comp.vertices) {
            if (!b.in_a(x)) {
                v = x;
                break;
            }
        }
        if (v < 0) throw precondition_error("decompose_A_even: component without a B-vertex");

        BalancedForest f2 = make_B_almost_odd(cg, b, v);
        merge_colors(d, color_balanced_forest(f2).color, 0);  // classes 1,2
        Graph gp = cg.minus_edges(f2.forest.edge_set());

        for (const auto& sub : components(gp)) {
            if (std::binary_search(sub.vertices.begin(), sub.vertices.end(), v)) continue;
            std::set<int> svs(sub.vertices.begin(), sub.vertices.end());
            Graph sg = gp.induced(svs);
            for (const Edge& e : sg.edges()) d.color[e] = 3;
        }
        Graph h = component_of(gp, v);
        if (h.size() == 0 || is_locally_irregular(h)) {
            for (const Edge& e : h.edges()) d.color[e] = 3;
            if (trace) trace->direct++;
            continue;
        }
        auto cyc = shortest_cycle_through(h, v);
        if (!cyc) {
            // all edges at v are cut edges: split at the smallest one
            Edge e = incident_edges(h, v).front();
            EdgeSet h1 = component_of(h.minus_edge(e), v).edge_set();
            for (const Edge& he : h.edges()) d.color[he] = h1.count(he) ? 3 : 4;
            if (trace) trace->cut_edge++;
            continue;
        }
        EdgeSet ces;
        for (std::size_t i = 0; i < cyc->size(); ++i)
            ces.insert(Edge((*cyc)[i], (*cyc)[(i + 1) % cyc->size()]));
        Graph hp = h.minus_edges(ces);
        std::vector<int> path = delete_conflict_path(hp, b, v);
        EdgeSet pes;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) pes.insert(Edge(path[i], path[i + 1]));
        Graph rest3 = hp.minus_edges(pes);
        for (const Edge& he : rest3.edges()) d.color[he] = 3;
        merge_colors(d, decompose_path_plus_cycle(*cyc, path, v).color, 3);  // classes 4..7
        if (trace) trace->cycle++;
    }
    if (d.color.size() != g.size()) throw internal_error("decompose_A_even: missed edges");
    return d;
}

Decomposition decompose_bipartite_even(const Graph& g) {
    if (g.size() == 0) {
        Decomposition d;
        d.graph = g;
        return d;
    }
    if (!is_connected(g)) throw precondition_error("decompose_bipartite_even: g must be connected");
    if (g.odd_size()) throw precondition_error("decompose_bipartite_even: g must have even size");
    auto b = try_bipartition(g);
    if (!b) throw precondition_error("decompose_bipartite_even: g must be bipartite");
    Decomposition d;
    d.graph = g;
    if (g.size() == 0) return d;
    BalancedForest f1 = make_A_even(g, *b);
    merge_colors(d, color_balanced_forest(f1).color, 0);  // classes 1,2
    Graph gp = g.minus_edges(f1.forest.edge_set());
    merge_colors(d, decompose_A_even(gp, *b).color, 2);  // classes 3..9
    if (d.color.size() != g.size()) throw internal_error("decompose_bipartite_even: missed edges");
    return d;
}

std::optional<Decomposition> decompose_bipartite(const Graph& g) {
    if (g.size() == 0) {
        Decomposition d;
        d.graph = g;
        return d;
    }
    if (!is_connected(g)) throw precondition_error("decompose_bipartite: g must be connected");
    if (!is_bipartite(g)) throw precondition_error("decompose_bipartite: g must be bipartite");
    if (is_exceptional(g)) return std::nullopt;
    if (!g.odd_size()) return decompose_bipartite_even(g);
    auto red = reduce_odd_size(g);
    if (!red) throw internal_error("decompose_bipartite: reduction failed on decomposable input");
    Decomposition d;
    d.graph = g;
    for (const Edge& e : red->removed.edges()) d.color[e] = 10;
    for (const auto& comp : components(red->rest)) {
        if (comp.edge_count == 0) continue;
        std::set<int> vs(comp.vertices.begin(), comp.vertices.end());
        merge_colors(d, decompose_bipartite_even(red->rest.induced(vs)).color, 0);
    }
    if (d.color.size() != g.size()) throw internal_error("decompose_bipartite: missed edges");
    return d;
}

}  // namespace liri
