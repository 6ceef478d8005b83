#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "liri/degenerate.hpp"
#include "liri/exact.hpp"
#include "liri/random.hpp"
#include "liri/structure.hpp"

using namespace liri;
using namespace helpers;

TEST_CASE("halve_neighbors takes the minority side") {
    // v=0 with 3 neighbors on one side, 1 on the other of a path 1-2-3-4
    Graph g = Graph::parse_edge_list("1 2\n2 3\n3 4\n0 1\n0 2\n0 3\n0 4");
    // sides of g-0: {1,3} (contains smallest id) and {2,4}
    EdgeSet e = halve_neighbors(g, 0);
    CHECK(e.size() <= g.degree(0) / 2);
    CHECK(is_bipartite(g.minus_edges(e)));

    // C5: one removed edge makes it bipartite
    Graph c5 = cycle_graph(5);
    EdgeSet e5 = halve_neighbors(c5, 0);
    CHECK(e5.size() == 1);
    CHECK(is_bipartite(c5.minus_edges(e5)));

    // 2+2 tie: the class containing the smallest id loses its edges
    Graph tie = Graph::parse_edge_list("1 2\n2 3\n3 4\n4 1\n0 1\n0 3\n0 2\n0 4");
    EdgeSet et = halve_neighbors(tie, 0);
    CHECK(et.size() == 2);
    CHECK(et.count(Edge(0, 1)) == 1);
    CHECK(et.count(Edge(0, 3)) == 1);
    CHECK(is_bipartite(tie.minus_edges(et)));

    CHECK_THROWS_AS(halve_neighbors(complete_graph(4), 0), precondition_error);
}

TEST_CASE("halve_neighbors_exact pads to the target and honors keep_vertex") {
    Graph star = star_graph(6);
    for (int t = 3; t <= 6; ++t) {
        EdgeSet e = halve_neighbors_exact(star, 0, t);
        CHECK(static_cast<int>(e.size()) == t);
    }
    // keep at least one edge into the component of the kept vertex
    EdgeSet keep = halve_neighbors_exact(star, 0, 5, 3);
    CHECK(keep.size() == 5);
    CHECK(keep.count(Edge(0, 3)) == 0);  // star component of 3 is just {3}
    CHECK_THROWS_AS(halve_neighbors_exact(star, 0, 7), precondition_error);
}

TEST_CASE("extend_even_bipartite degree 2 direct attach") {
    // square 1-2-3-4 already one even bipartite part; v=0 attaches to 1 and 3
    Graph g = Graph::parse_edge_list("1 2\n2 3\n3 4\n1 4\n0 1\n0 3");
    EvenBipartiteFamily fam = {g.minus_vertex(0)};
    auto out = extend_even_bipartite(g, 0, fam, 2);
    CHECK(even_bipartite_family_ok(g, out));
}

TEST_CASE("extend_even_bipartite degree 2 forced recolor") {
    // both parts join v's neighbors 0 and 1 by odd paths, forcing the
    // edge-flip repair before attaching
    Graph p1 = Graph::parse_edge_list("0 1\n0 2");
    Graph p2 = Graph::parse_edge_list("0 3\n3 4\n1 4\n4 5");
    Graph g = Graph::parse_edge_list("0 1\n0 2\n0 3\n3 4\n1 4\n4 5\n0 6\n1 6");
    EvenBipartiteFamily fam = {p1, p2};
    auto out = extend_even_bipartite(g, 6, fam, 2);
    CHECK(even_bipartite_family_ok(g, out));
}

TEST_CASE("extend_even_bipartite degree 4 recursion") {
    std::mt19937 rng(79);
    int done = 0;
    while (done < 100) {
        Graph base = random_degenerate_even(rng, 8, 2, 0.45);
        std::vector<int> vs = base.vertices();
        if (vs.size() < 4) continue;
        std::shuffle(vs.begin(), vs.end(), rng);
        int v = base.vertices().back() + 1;
        Graph g = base;
        for (int i = 0; i < 4; ++i) g = g.with_edge(Edge(v, vs[i]));
        EvenBipartiteFamily fam;
        try {
            fam = decompose_degenerate_even(base, 2);
        } catch (const precondition_error&) {
            continue;
        }
        auto out = extend_even_bipartite(g, v, fam, 3);
        CHECK(out.size() == 3);
        CHECK(even_bipartite_family_ok(g, out));
        ++done;
    }
}

TEST_CASE("decompose_degenerate_even on trees and K4") {
    Graph tree = Graph::parse_edge_list("0 1\n1 2\n1 3\n3 4");
    auto fam = decompose_degenerate_even(tree, 1);
    CHECK(fam.size() == 2);
    CHECK(even_bipartite_family_ok(tree, fam));

    Graph k4 = complete_graph(4);
    auto fk4 = decompose_degenerate_even(k4, 3);
    CHECK(fk4.size() == 3);
    CHECK(even_bipartite_family_ok(k4, fk4));
    int nonempty = 0;
    for (const Graph& p : fk4)
        if (p.size() > 0) nonempty++;
    CHECK(nonempty == 3);

    // no 2-part family exists for K4: exhaustive over all assignments
    std::vector<Edge> edges = k4.edges();
    bool two_part = false;
    for (unsigned mask = 0; mask < (1u << 6) && !two_part; ++mask) {
        EdgeSet a, b;
        for (int i = 0; i < 6; ++i) (mask >> i & 1 ? a : b).insert(edges[i]);
        EvenBipartiteFamily cand = {k4.edge_subgraph(a), k4.edge_subgraph(b)};
        two_part = even_bipartite_family_ok(k4, cand);
    }
    CHECK(!two_part);

    CHECK_THROWS_AS(decompose_degenerate_even(k4, 2), precondition_error);  // not 2-degenerate
    CHECK_THROWS_AS(decompose_degenerate_even(path_graph(3), 1), precondition_error);  // odd
}

TEST_CASE("decompose_degenerate_even on random graphs") {
    std::mt19937 rng(83);
    for (int d = 1; d <= 4; ++d) {
        for (int i = 0; i < 100; ++i) {
            Graph g = random_degenerate_even(rng, 6 + static_cast<int>(rng() % 6), d, 0.5);
            auto fam = decompose_degenerate_even(g, d);
            CHECK(static_cast<int>(fam.size()) == degenerate_part_bound(d));
            CHECK(even_bipartite_family_ok(g, fam));
        }
    }
}

TEST_CASE("chi_bound_degenerate") {
    Graph tree = Graph::parse_edge_list("0 1\n1 2\n1 3\n3 4");
    CHECK(verify(chi_bound_degenerate(tree, 1), 18).valid);
    CHECK(verify(chi_bound_degenerate(complete_graph(4), 3), 27).valid);
    CHECK(chi_bound_degenerate(Graph(), 3).class_count() == 0);
    CHECK_THROWS_AS(chi_bound_degenerate(path_graph(3), 1), precondition_error);  // odd size

    std::mt19937 rng(89);
    int done = 0;
    while (done < 100) {
        Graph g = random_degenerate_even(rng, 8, 3, 0.5);
        for (const auto& comp : components(g)) {
            if (comp.edge_count == 0) continue;
            std::set<int> vs(comp.vertices.begin(), comp.vertices.end());
            Decomposition dec = chi_bound_degenerate(g.induced(vs), 3);
            CHECK(verify(dec, 9 * degenerate_part_bound(3)).valid);
            ++done;
        }
    }
}

namespace {

void check_split(const Graph& g, int d, const std::pair<Graph, Graph>& split) {
    const auto& [dpart, hpart] = split;
    CHECK(dpart.size() + hpart.size() == g.size());
    for (const Edge& e : dpart.edges()) {
        CHECK(g.has_edge(e));
        CHECK(!hpart.has_edge(e));
    }
    for (const Edge& e : hpart.edges()) CHECK(g.has_edge(e));
    CHECK(degeneracy_order(dpart).degeneracy <= 2 * d);
    CHECK(all_components_even(dpart));
    if (hpart.order() > 0) CHECK(hpart.min_degree() >= d);
}

}  // namespace

TEST_CASE("split_degenerate_min_degree") {
    auto s1 = split_degenerate_min_degree(cycle_graph(4), 1);
    check_split(cycle_graph(4), 1, s1);
    CHECK(s1.second.size() == 0);  // all degrees <= 2d

    auto s2 = split_degenerate_min_degree(complete_graph(5), 2);
    check_split(complete_graph(5), 2, s2);
    CHECK(s2.second.size() == 0);  // min degree 4 < 2d+1 peels everything

    auto s3 = split_degenerate_min_degree(complete_graph(7), 2);
    check_split(complete_graph(7), 2, s3);
    CHECK(s3.first.size() == 0);  // min degree 6 >= 5 keeps everything

    CHECK_THROWS_AS(split_degenerate_min_degree(path_graph(3), 1), precondition_error);

    std::mt19937 rng(97);
    for (int i = 0; i < 200; ++i) {
        int d = 1 + static_cast<int>(rng() % 3);
        Graph g = random_connected_graph_parity(rng, 5 + static_cast<int>(rng() % 6), 0.5, false);
        check_split(g, d, split_degenerate_min_degree(g, d));
    }
}

namespace {

HighDegreeDecomposer oracle_plugin(int threshold) {
    return {threshold, [](const Graph& h) {
                auto r = chi_irr_exact(h, 3, 1000);
                REQUIRE(r.found());
                return *r.witness;
            }};
}

}  // namespace

TEST_CASE("decompose_general end to end") {
    CHECK_THROWS_AS(decompose_general(complete_graph(3), oracle_plugin(2)), precondition_error);
    CHECK_THROWS_AS(decompose_general(path_graph(5), oracle_plugin(2)), precondition_error);

    for (int threshold : {2, 3, 4}) {
        long long beven = general_chi_bound_even(threshold);
        Decomposition d1 = decompose_general(complete_graph(6), oracle_plugin(threshold));
        CHECK(verify(d1, static_cast<int>(beven + 1)).valid);

        std::mt19937 rng(101 + threshold);
        for (int i = 0; i < 60; ++i) {
            Graph g = random_connected_graph(rng, 5 + static_cast<int>(rng() % 5), 0.5);
            if (is_exceptional(g)) continue;
            long long bound = g.odd_size() ? beven + 1 : beven;
            Decomposition d = decompose_general(g, oracle_plugin(threshold));
            CHECK(verify(d, static_cast<int>(bound)).valid);
        }
    }
}

TEST_CASE("bound formulas") {
    CHECK(degenerate_part_bound(1) == 2);
    CHECK(degenerate_part_bound(3) == 3);
    CHECK(degenerate_part_bound(4) == 4);
    CHECK(degenerate_part_bound(7) == 4);
    CHECK(degenerate_part_bound(8) == 5);
    CHECK(general_chi_bound_even(10'000'000'000LL) == 327);
    CHECK(general_chi_bound(10'000'000'000LL) == 328);
}
