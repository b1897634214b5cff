#include <doctest.h>

#include <algorithm>
#include <random>

#include "ramseykit/errors.hpp"
#include "ramseykit/graph.hpp"

using namespace rk;

TEST_CASE("vertex set basics") {
    VertexSet s(70);
    CHECK(s.empty());
    CHECK(s.count() == 0);
    s.set(0);
    s.set(63);
    s.set(64);
    s.set(69);
    CHECK(s.count() == 4);
    CHECK(s.test(63));
    CHECK(s.test(64));
    CHECK_FALSE(s.test(1));
    CHECK(s.first() == 0);
    CHECK(s.next(0) == 63);
    CHECK(s.next(63) == 64);
    CHECK(s.next(64) == 69);
    CHECK(s.next(69) == -1);
    s.reset(63);
    CHECK(s.count() == 3);
    CHECK(s.to_vector() == std::vector<int>{0, 64, 69});
}

TEST_CASE("vertex set algebra") {
    VertexSet a(10), b(10);
    for (int v : {1, 3, 5, 7}) a.set(v);
    for (int v : {3, 4, 5}) b.set(v);
    CHECK((a & b).to_vector() == std::vector<int>{3, 5});
    CHECK((a | b).to_vector() == std::vector<int>{1, 3, 4, 5, 7});
    CHECK((a - b).to_vector() == std::vector<int>{1, 7});
    CHECK(a.intersects(b));
    CHECK_FALSE((a - b).intersects(b));
    VertexSet sub(10);
    sub.set(3);
    CHECK(sub.is_subset_of(a));
    CHECK(sub.is_subset_of(b));
    CHECK_FALSE(a.is_subset_of(b));
    CHECK(VertexSet::full(10).count() == 10);
    CHECK(a.complement().count() == 6);
    CHECK((a.complement() & a).empty());
}

TEST_CASE("vertex set for_each matches to_vector") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 1 + static_cast<int>(rng() % 100);
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if (rng() & 1) s.set(v);
        std::vector<int> seen;
        s.for_each([&](int v) { seen.push_back(v); });
        CHECK(seen == s.to_vector());
    }
}

TEST_CASE("graph construction and edge queries") {
    Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {0, 1}});
    CHECK(g.order() == 4);
    CHECK(g.size() == 3); // duplicate collapsed
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.neighbors(1).to_vector() == std::vector<int>{0, 2});
    CHECK(g.closed_neighborhood(1).to_vector() ==
          std::vector<int>{0, 1, 2});
    CHECK(g.edges() ==
          std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), self_loop);
    CHECK_THROWS_AS(Graph(2, {{0, 5}}), invalid_vertex);
    CHECK_THROWS_AS(g.degree(9), invalid_vertex);
}

TEST_CASE("induced subgraph keeps exactly the internal edges") {
    // 5-cycle
    Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    Induced sub = induced_subgraph(g, std::vector<int>{0, 1, 3});
    CHECK(sub.graph.order() == 3);
    CHECK(sub.vertices == std::vector<int>{0, 1, 3});
    CHECK(sub.graph.has_edge(0, 1)); // 0-1 survives
    CHECK_FALSE(sub.graph.has_edge(1, 2));
    CHECK_FALSE(sub.graph.has_edge(0, 2));

    VertexSet pick(5);
    pick.set(2);
    pick.set(3);
    pick.set(4);
    Induced sub2 = induced_subgraph(g, pick);
    CHECK(sub2.graph.size() == 2); // 2-3 and 3-4
}

TEST_CASE("delete vertex relabels downward") {
    Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
    Graph h = delete_vertex(g, 1);
    CHECK(h.order() == 3);
    // remaining path 2-3 becomes 1-2
    CHECK(h.size() == 1);
    CHECK(h.has_edge(1, 2));
}

TEST_CASE("components come out in least-vertex order") {
    Graph g(5, {{3, 4}, {0, 1}});
    auto comps = components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0].to_vector() == std::vector<int>{0, 1});
    CHECK(comps[1].to_vector() == std::vector<int>{2});
    CHECK(comps[2].to_vector() == std::vector<int>{3, 4});
    CHECK(component_count(g) == 3);
    CHECK_FALSE(is_connected(g));
    CHECK(is_connected(Graph(1)));
    CHECK(is_connected(Graph(0)));
}

TEST_CASE("join, union, copies, complement") {
    Graph k2(2, {{0, 1}});
    Graph e2(2);
    Graph j = join_graphs(e2, k2); // K_4 minus one edge
    CHECK(j.order() == 4);
    CHECK(j.size() == 5);
    CHECK_FALSE(j.has_edge(0, 1));

    Graph u = disjoint_union(k2, k2);
    CHECK(u.order() == 4);
    CHECK(u.size() == 2);
    CHECK(u.has_edge(2, 3));
    CHECK_FALSE(u.has_edge(1, 2));

    Graph c = disjoint_copies(k2, 3);
    CHECK(c.order() == 6);
    CHECK(c.size() == 3);

    Graph comp = complement_graph(j);
    CHECK(comp.size() == 4 * 3 / 2 - 5);
    CHECK(comp.has_edge(0, 1));
}

TEST_CASE("row64 mirrors the adjacency row") {
    Graph g(5, {{0, 2}, {0, 4}, {1, 2}});
    CHECK(g.row64(0) == ((1ull << 2) | (1ull << 4)));
    CHECK(g.row64(3) == 0);
}
