#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "liri/exact.hpp"
#include "liri/irregularity.hpp"
#include "liri/parity.hpp"
#include "liri/random.hpp"
#include "liri/structure.hpp"

using namespace liri;
using namespace helpers;

TEST_CASE("find_even_parity_edge on fixed shapes") {
    Graph claw = star_graph(3);
    Edge e = find_even_parity_edge(claw, 0);
    CHECK(e.touches(0));
    CHECK(all_components_even(claw.minus_edge(e)));

    Graph p3 = path_graph(3);
    Edge pe = find_even_parity_edge(p3, 0);
    CHECK(pe == Edge(0, 1));
    CHECK(all_components_even(p3.minus_edge(pe)));

    Graph tri = complete_graph(3);
    Edge te = find_even_parity_edge(tri, 1);
    CHECK(te.touches(1));
    CHECK(all_components_even(tri.minus_edge(te)));

    CHECK_THROWS_AS(find_even_parity_edge(cycle_graph(4), 0), precondition_error);  // even size
}

TEST_CASE("find_even_parity_edge postcondition on random graphs") {
    std::mt19937 rng(31);
    for (int i = 0; i < 200; ++i) {
        Graph g = random_connected_graph_parity(rng, 3 + static_cast<int>(rng() % 6), 0.4, true);
        for (int v : g.vertices()) {
            if (g.degree(v) < 1) continue;
            Edge e = find_even_parity_edge(g, v);
            CHECK(e.touches(v));
            CHECK(all_components_even(g.minus_edge(e)));
        }
    }
}

TEST_CASE("find_even_parity_path2 on fixed shapes") {
    Graph p2 = path_graph(2);
    auto [e, f] = find_even_parity_path2(p2, 0);
    CHECK(all_components_even(p2.minus_edge(e).minus_edge(f)));
    CHECK(p2.minus_edge(e).minus_edge(f).size() == 0);

    Graph c4 = cycle_graph(4);
    auto [ce, cf] = find_even_parity_path2(c4, 0);
    CHECK((ce.touches(0) || cf.touches(0)));
    // the two edges share exactly one vertex: a path of length 2
    std::set<int> ends = {ce.u, ce.v, cf.u, cf.v};
    CHECK(ends.size() == 3);
    CHECK(all_components_even(c4.minus_edge(ce).minus_edge(cf)));

    // claw with one subdivided edge, centered at 0 (4 edges)
    Graph sub = Graph::parse_edge_list("0 1\n0 2\n0 3\n3 4");
    auto [se, sf] = find_even_parity_path2(sub, 0);
    CHECK(all_components_even(sub.minus_edge(se).minus_edge(sf)));

    CHECK_THROWS_AS(find_even_parity_path2(path_graph(3), 0), precondition_error);  // odd size
}

TEST_CASE("find_even_parity_path2 postcondition on random graphs") {
    std::mt19937 rng(37);
    for (int i = 0; i < 200; ++i) {
        Graph g = random_connected_graph_parity(rng, 3 + static_cast<int>(rng() % 6), 0.4, false);
        if (g.size() < 2) continue;
        for (int v : g.vertices()) {
            if (g.degree(v) < 1) continue;
            auto [e, f] = find_even_parity_path2(g, v);
            std::set<int> ends = {e.u, e.v, f.u, f.v};
            CHECK(ends.size() == 3);
            CHECK((e.touches(v) || f.touches(v)));
            CHECK(all_components_even(g.minus_edge(e).minus_edge(f)));
        }
    }
}

namespace {

void check_reduction(const Graph& g, const OddReduction& red) {
    CHECK(is_locally_irregular(red.removed));
    CHECK(red.removed.size() > 0);
    CHECK(all_components_even(red.rest));
    CHECK(red.removed.size() + red.rest.size() == g.size());
    for (const Edge& e : red.removed.edges()) {
        CHECK(g.has_edge(e));
        CHECK(!red.rest.has_edge(e));
    }
    for (const Edge& e : red.rest.edges()) CHECK(g.has_edge(e));
}

}  // namespace

TEST_CASE("reduce_odd_size on fixed shapes") {
    Graph star5 = star_graph(5);
    auto r = reduce_odd_size(star5);
    REQUIRE(r.has_value());
    check_reduction(star5, *r);
    CHECK(r->removed.size() == 3);  // a claw
    CHECK(r->rest.size() == 2);

    CHECK(!reduce_odd_size(complete_graph(3)).has_value());
    CHECK(!reduce_odd_size(path_graph(5)).has_value());

    Graph k4p = complete_graph(4).with_edge(Edge(0, 4));
    auto r2 = reduce_odd_size(k4p);
    REQUIRE(r2.has_value());
    check_reduction(k4p, *r2);

    CHECK_THROWS_AS(reduce_odd_size(cycle_graph(4)), precondition_error);  // even size
}

TEST_CASE("reduce_odd_size agrees with exceptionality on all small graphs") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : enumerate_connected_graphs(n)) {
            if (!g.odd_size()) continue;
            auto r = reduce_odd_size(g);
            CHECK(r.has_value() == !is_exceptional(g));
            if (r) check_reduction(g, *r);
        }
    }
}

TEST_CASE("reduce_odd_size on random odd non-exceptional graphs") {
    std::mt19937 rng(41);
    int done = 0;
    while (done < 500) {
        int n = 4 + static_cast<int>(rng() % 4);
        Graph g = random_connected_odd_nonexceptional(rng, n, 0.5);
        if (g.size() > 12) continue;
        auto r = reduce_odd_size(g);
        REQUIRE(r.has_value());
        check_reduction(g, *r);
        ++done;
    }
}
