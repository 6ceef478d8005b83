#include "liri/structure.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>

namespace liri {

std::vector<Component> components(const Graph& g) {
    std::map<int, int> comp;
    int nc = 0;
    for (int s : g.vertices()) {
        if (comp.count(s)) continue;
        int id = nc++;
        std::deque<int> q{s};
        comp[s] = id;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (int y : g.neighbors(x)) {
                if (!comp.count(y)) {
                    comp[y] = id;
                    q.push_back(y);
                }
            }
        }
    }
    std::vector<Component> out(nc);
    for (auto& [v, id] : comp) out[id].vertices.push_back(v);
    for (const Edge& e : g.edges()) out[comp[e.u]].edge_count++;
    for (auto& c : out) std::sort(c.vertices.begin(), c.vertices.end());
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool all_components_even(const Graph& g) {
    for (const auto& c : components(g))
        if (!c.even()) return false;
    return true;
}

Graph component_of(const Graph& g, int v) {
    for (const auto& c : components(g)) {
        if (std::binary_search(c.vertices.begin(), c.vertices.end(), v))
            return g.induced(std::set<int>(c.vertices.begin(), c.vertices.end()));
    }
    throw precondition_error("component_of: vertex not in graph");
}

namespace {

// BFS 2-coloring; returns side map or an odd cycle.
std::variant<std::map<int, int>, OddCycle> two_color(const Graph& g) {
    std::map<int, int> side;
    std::map<int, int> parent;
    for (int s : g.vertices()) {
        if (side.count(s)) continue;
        side[s] = 0;
        parent[s] = -1;
        std::deque<int> q{s};
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (int y : g.neighbors(x)) {
                if (!side.count(y)) {
                    side[y] = 1 - side[x];
                    parent[y] = x;
                    q.push_back(y);
                } else if (side[y] == side[x] && parent[x] != y && parent[y] != x) {
                    // odd cycle: climb to common ancestor
                    std::vector<int> px{x}, py{y};
                    std::set<int> on_px{x};
                    for (int c = x; parent[c] != -1;) {
                        c = parent[c];
                        px.push_back(c);
                        on_px.insert(c);
                    }
                    int meet = y;
                    while (!on_px.count(meet)) {
                        meet = parent[meet];
                        py.push_back(meet);
                    }
                    std::vector<int> cyc;
                    for (int c : px) {
                        cyc.push_back(c);
                        if (c == meet) break;
                    }
                    std::reverse(cyc.begin(), cyc.end());
                    for (std::size_t i = 0; i + 1 < py.size(); ++i) cyc.push_back(py[i]);
                    std::reverse(cyc.begin(), cyc.end());
                    return OddCycle{cyc};
                } else if (side[y] == side[x] && (parent[x] == y || parent[y] == x)) {
                    throw internal_error("two_color: tree edge with equal sides");
                }
            }
        }
    }
    return side;
}

}  // namespace

std::variant<Bipartition, OddCycle> bipartition(const Graph& g) {
    auto res = two_color(g);
    if (std::holds_alternative<OddCycle>(res)) return std::get<OddCycle>(res);
    auto& side = std::get<std::map<int, int>>(res);
    // normalize per component: smallest id of each component goes to class A
    Bipartition b;
    for (const auto& c : components(g)) {
        int flip = side[c.vertices.front()];  // smallest id's side
        for (int v : c.vertices) {
            if (side[v] == flip)
                b.class_a.insert(v);
            else
                b.class_b.insert(v);
        }
    }
    return b;
}

std::optional<Bipartition> try_bipartition(const Graph& g) {
    auto r = bipartition(g);
    if (std::holds_alternative<Bipartition>(r)) return std::get<Bipartition>(r);
    return std::nullopt;
}

bool is_bipartite(const Graph& g) { return try_bipartition(g).has_value(); }

DegeneracyResult degeneracy_order(const Graph& g) {
    std::map<int, int> deg;
    std::map<int, std::vector<int>> adj;
    for (int v : g.vertices()) deg[v] = g.degree(v);
    for (int v : g.vertices()) adj[v] = g.neighbors(v);
    std::set<std::pair<int, int>> pq;  // (degree, id)
    for (auto& [v, d] : deg) pq.insert({d, v});
    DegeneracyResult r;
    std::set<int> removed;
    while (!pq.empty()) {
        auto [d, v] = *pq.begin();
        pq.erase(pq.begin());
        r.degeneracy = std::max(r.degeneracy, d);
        r.ordering.push_back(v);
        removed.insert(v);
        for (int y : adj[v]) {
            if (removed.count(y)) continue;
            pq.erase({deg[y], y});
            deg[y]--;
            pq.insert({deg[y], y});
        }
    }
    return r;
}

namespace {

// Unit-capacity max flow via BFS augmenting paths.
int max_flow_unit(const Graph& g, int s, int t) {
    // arcs: for each edge, two directed arcs with capacity 1
    std::map<int, std::vector<int>> arc_at;  // vertex -> arc indices
    std::vector<int> head, cap;
    auto add_arc = [&](int a, int b) {
        arc_at[a].push_back(static_cast<int>(head.size()));
        head.push_back(b);
        cap.push_back(1);
    };
    for (const Edge& e : g.edges()) {
        add_arc(e.u, e.v);
        add_arc(e.v, e.u);
    }
    int flow = 0;
    while (true) {
        std::map<int, int> via;  // vertex -> arc index used to reach it
        std::deque<int> q{s};
        via[s] = -1;
        while (!q.empty() && !via.count(t)) {
            int x = q.front();
            q.pop_front();
            for (int ai : arc_at[x]) {
                if (cap[ai] <= 0) continue;
                int y = head[ai];
                if (via.count(y)) continue;
                via[y] = ai;
                q.push_back(y);
            }
        }
        if (!via.count(t)) break;
        int x = t;
        while (x != s) {
            int ai = via[x];
            cap[ai]--;
            cap[ai ^ 1]++;
            x = head[ai ^ 1];
        }
        ++flow;
    }
    return flow;
}

}  // namespace

int edge_connectivity(const Graph& g) {
    if (g.order() < 2) throw precondition_error("edge_connectivity: need at least 2 vertices");
    if (!is_connected(g)) throw precondition_error("edge_connectivity: graph is disconnected");
    int s = g.vertices().front();
    int best = -1;
    for (int t : g.vertices()) {
        if (t == s) continue;
        int f = max_flow_unit(g, s, t);
        if (best < 0 || f < best) best = f;
    }
    return best;
}

std::optional<std::vector<int>> shortest_cycle_through(const Graph& g, int v) {
    if (!g.has_vertex(v)) throw precondition_error("shortest_cycle_through: no such vertex");
    std::map<int, int> dist, parent, branch;
    dist[v] = 0;
    parent[v] = -1;
    branch[v] = -1;
    std::deque<int> q{v};
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int y : g.neighbors(x)) {
            if (!dist.count(y)) {
                dist[y] = dist[x] + 1;
                parent[y] = x;
                branch[y] = (x == v) ? y : branch[x];
                q.push_back(y);
            }
        }
    }
    auto path_to_root = [&](int x) {
        std::vector<int> p;
        for (int c = x; c != -1; c = parent[c]) p.push_back(c);
        std::reverse(p.begin(), p.end());  // from v to x
        return p;
    };
    std::optional<std::vector<int>> best;
    for (const Edge& e : g.edges()) {
        int x = e.u, y = e.v;
        if (x == v || y == v) continue;
        if (!dist.count(x) || !dist.count(y)) continue;
        if (parent[x] == y || parent[y] == x) continue;
        if (branch[x] == branch[y]) continue;
        // simple cycle: v..x, edge, y..v
        std::vector<int> px = path_to_root(x);
        std::vector<int> py = path_to_root(y);
        std::vector<int> cyc = px;
        for (auto it = py.rbegin(); it != py.rend() && *it != v; ++it) cyc.push_back(*it);
        std::vector<int> alt = py;
        for (auto it = px.rbegin(); it != px.rend() && *it != v; ++it) alt.push_back(*it);
        if (alt < cyc) cyc = alt;
        if (!best || cyc.size() < best->size() || (cyc.size() == best->size() && cyc < *best))
            best = cyc;
    }
    return best;
}

Orientation almost_balanced_orientation(const Graph& g) {
    // Pair odd-degree vertices with auxiliary edges, take Euler tours of the
    // augmented multigraph, orient along the tours, discard auxiliaries.
    struct MEdge {
        int u, v;
        bool aux;
    };
    std::vector<MEdge> medges;
    for (const Edge& e : g.edges()) medges.push_back({e.u, e.v, false});
    std::vector<int> odd;
    for (int v : g.vertices())
        if (g.degree(v) % 2 == 1) odd.push_back(v);
    for (std::size_t i = 0; i + 1 < odd.size(); i += 2)
        medges.push_back({odd[i], odd[i + 1], true});

    std::map<int, std::vector<int>> inc;  // vertex -> medge indices
    for (std::size_t i = 0; i < medges.size(); ++i) {
        inc[medges[i].u].push_back(static_cast<int>(i));
        inc[medges[i].v].push_back(static_cast<int>(i));
    }
    std::vector<bool> used(medges.size(), false);
    std::map<int, std::size_t> ptr;
    Orientation out;
    for (int s : g.vertices()) {
        // Hierholzer from s over unused edges
        while (ptr[s] < inc[s].size() && used[inc[s][ptr[s]]]) ptr[s]++;
        if (ptr[s] >= inc[s].size()) continue;
        std::vector<std::pair<int, int>> stack{{s, -1}};  // (vertex, medge arrived by)
        std::vector<std::pair<int, int>> tour;            // arcs in reverse completion order
        while (!stack.empty()) {
            int x = stack.back().first;
            while (ptr[x] < inc[x].size() && used[inc[x][ptr[x]]]) ptr[x]++;
            if (ptr[x] == inc[x].size()) {
                auto [vx, ei] = stack.back();
                stack.pop_back();
                if (ei >= 0) {
                    int from = stack.back().first;
                    if (!medges[ei].aux) tour.push_back({from, vx});
                }
            } else {
                int ei = inc[x][ptr[x]];
                used[ei] = true;
                int y = medges[ei].u == x ? medges[ei].v : medges[ei].u;
                stack.push_back({y, ei});
            }
        }
        // A closed tour traversed in either consistent direction balances
        // in/out at each vertex; reverse completion order is consistent.
        for (auto& a : tour) out.arcs.push_back(a);
    }
    if (out.arcs.size() != g.size()) throw internal_error("orientation: missed edges");
    return out;
}

namespace {

struct BridgeState {
    std::map<int, int> disc, low;
    int timer = 0;
    EdgeSet out;
};

}  // namespace

EdgeSet bridges(const Graph& g) {
    BridgeState st;
    // iterative DFS
    for (int s : g.vertices()) {
        if (st.disc.count(s)) continue;
        std::vector<std::tuple<int, int, std::size_t>> stack;  // (v, parent, next-neighbor-idx)
        stack.push_back({s, -1, 0});
        st.disc[s] = st.low[s] = st.timer++;
        while (!stack.empty()) {
            auto& [x, par, idx] = stack.back();
            const auto& ns = g.neighbors(x);
            bool descended = false;
            bool skipped_parent = false;
            while (idx < ns.size()) {
                int y = ns[idx];
                if (y == par && !skipped_parent) {
                    // skip one parent occurrence (simple graph: exactly one)
                    skipped_parent = true;
                    ++idx;
                    continue;
                }
                ++idx;
                if (!st.disc.count(y)) {
                    st.disc[y] = st.low[y] = st.timer++;
                    stack.push_back({y, x, 0});
                    descended = true;
                    break;
                } else {
                    st.low[x] = std::min(st.low[x], st.disc[y]);
                }
            }
            if (descended) continue;
            if (idx >= ns.size()) {
                stack.pop_back();
                if (!stack.empty()) {
                    int p = std::get<0>(stack.back());
                    st.low[p] = std::min(st.low[p], st.low[x]);
                    if (st.low[x] > st.disc[p]) st.out.insert(Edge(p, x));
                }
            }
        }
    }
    return st.out;
}

bool is_cut_edge(const Graph& g, const Edge& e) { return bridges(g).count(e) > 0; }

std::vector<std::array<int, 3>> triangles(const Graph& g) {
    std::vector<std::array<int, 3>> out;
    for (const Edge& e : g.edges()) {
        for (int w : g.neighbors(e.u)) {
            if (w > e.v && g.has_edge(e.v, w)) out.push_back({e.u, e.v, w});
        }
    }
    return out;
}

EdgeSet spanning_tree(const Graph& g) {
    if (!is_connected(g)) throw precondition_error("spanning_tree: graph is disconnected");
    EdgeSet tree;
    if (g.empty()) return tree;
    std::set<int> seen{g.vertices().front()};
    std::deque<int> q{g.vertices().front()};
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int y : g.neighbors(x)) {
            if (seen.insert(y).second) {
                tree.insert(Edge(x, y));
                q.push_back(y);
            }
        }
    }
    return tree;
}

std::optional<std::vector<int>> shortest_path(const Graph& g, int from, int to) {
    std::map<int, int> parent;
    parent[from] = from;
    std::deque<int> q{from};
    while (!q.empty() && !parent.count(to)) {
        int x = q.front();
        q.pop_front();
        for (int y : g.neighbors(x)) {
            if (!parent.count(y)) {
                parent[y] = x;
                q.push_back(y);
            }
        }
    }
    if (!parent.count(to)) return std::nullopt;
    std::vector<int> path{to};
    while (path.back() != from) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<Edge> incident_edges(const Graph& g, int v) {
    std::vector<Edge> out;
    for (int y : g.neighbors(v)) out.push_back(Edge(v, y));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace liri
