#include "liri/exact.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>

#include "liri/structure.hpp"

namespace liri {

namespace {

struct Searcher {
    const Graph& g;
    int k;
    std::vector<Edge> order;            // search order
    std::vector<int> color;             // per edge in `order`, 0 = unset
    std::map<int, int> remaining;       // uncolored incident edges per vertex
    std::map<int, std::vector<int>> deg_in;  // vertex -> per-color degree (1..k)

    Searcher(const Graph& graph, int classes) : g(graph), k(classes) {
        order = g.edges();
        std::stable_sort(order.begin(), order.end(), [&](const Edge& a, const Edge& b) {
            int da = std::min(g.degree(a.u), g.degree(a.v));
            int db = std::min(g.degree(b.u), g.degree(b.v));
            return da > db;
        });
        color.assign(order.size(), 0);
        for (int v : g.vertices()) {
            remaining[v] = g.degree(v);
            deg_in[v].assign(k + 1, 0);
        }
    }

    // A vertex is settled once all its incident edges are colored. Check the
    // colored edges at a settled vertex for equal-degree conflicts against
    // settled neighbors.
    bool ok_at(int v) {
        for (int y : g.neighbors(v)) {
            if (remaining[y] > 0) continue;
            for (int c = 1; c <= k; ++c) {
                int dv = deg_in[v][c], dy = deg_in[y][c];
                if (dv > 0 && dv == dy && edge_has_color(Edge(v, y), c)) return false;
            }
        }
        return true;
    }

    bool edge_has_color(const Edge& e, int c) {
        for (std::size_t i = 0; i < order.size(); ++i)
            if (order[i] == e) return color[i] == c;
        return false;
    }

    bool solve(std::size_t i, int max_used) {
        if (i == order.size()) return true;
        const Edge& e = order[i];
        // symmetry: a fresh color only as max_used + 1
        int top = std::min(k, max_used + 1);
        for (int c = 1; c <= top; ++c) {
            color[i] = c;
            deg_in[e.u][c]++;
            deg_in[e.v][c]++;
            remaining[e.u]--;
            remaining[e.v]--;
            bool ok = true;
            if (remaining[e.u] == 0) ok = ok_at(e.u);
            if (ok && remaining[e.v] == 0) ok = ok_at(e.v);
            if (ok && solve(i + 1, std::max(max_used, c))) return true;
            color[i] = 0;
            deg_in[e.u][c]--;
            deg_in[e.v][c]--;
            remaining[e.u]++;
            remaining[e.v]++;
        }
        return false;
    }
};

}  // namespace

ChiResult chi_irr_exact(const Graph& g, int limit, std::size_t size_guard) {
    if (g.size() > size_guard)
        throw precondition_error("chi_irr_exact: edge count exceeds size guard");
    if (!is_connected(g)) throw precondition_error("chi_irr_exact: input must be connected");
    ChiResult r;
    if (g.size() == 0) {
        r.status = ChiResult::Status::Found;
        r.k = 0;
        r.witness = Decomposition{g, {}};
        return r;
    }
    int complete = std::max<int>(1, static_cast<int>(g.size()) / 2);
    int top = std::min(limit, complete);
    for (int k = 1; k <= top; ++k) {
        Searcher s(g, k);
        if (s.solve(0, 0)) {
            Decomposition d;
            d.graph = g;
            for (std::size_t i = 0; i < s.order.size(); ++i) d.color[s.order[i]] = s.color[i];
            r.status = ChiResult::Status::Found;
            r.k = k;
            r.witness = d;
            return r;
        }
    }
    r.status = limit >= complete ? ChiResult::Status::Exceptional
                                 : ChiResult::Status::LimitReached;
    return r;
}

namespace {

using Mask = std::uint32_t;  // adjacency bitmask, bit for pair (i<j): j*(j-1)/2 + i

int pair_bit(int i, int j) {
    if (i > j) std::swap(i, j);
    return j * (j - 1) / 2 + i;
}

Mask canonical(Mask m, int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Mask best = ~Mask{0};
    do {
        Mask cur = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (m & (Mask{1} << pair_bit(perm[i], perm[j]))) cur |= Mask{1} << pair_bit(i, j);
        best = std::min(best, cur);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Graph mask_to_graph(Mask m, int n) {
    std::vector<int> vs(n);
    std::iota(vs.begin(), vs.end(), 0);
    std::vector<Edge> es;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (m & (Mask{1} << pair_bit(i, j))) es.push_back(Edge(i, j));
    return Graph(vs, es);
}

}  // namespace

std::vector<Graph> enumerate_connected_graphs(int n) {
    if (n < 1 || n > 7) throw precondition_error("enumerate_connected_graphs: need 1 <= n <= 7");
    // Grow from connected graphs on n-1 vertices by attaching a new vertex to
    // every nonempty neighbor subset; every connected graph has a vertex whose
    // removal keeps it connected, so this reaches everything.
    std::set<Mask> cur{0};  // n = 1: the single vertex
    for (int m = 2; m <= n; ++m) {
        std::set<Mask> next;
        for (Mask base : cur) {
            for (Mask nb = 1; nb < (Mask{1} << (m - 1)); ++nb) {
                Mask g = base;
                for (int i = 0; i < m - 1; ++i)
                    if (nb & (Mask{1} << i)) g |= Mask{1} << pair_bit(i, m - 1);
                next.insert(canonical(g, m));
            }
        }
        cur = std::move(next);
    }
    std::vector<Graph> out;
    for (Mask m : cur) out.push_back(mask_to_graph(m, n));
    return out;
}

}  // namespace liri
