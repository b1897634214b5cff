#include <doctest.h>

#include <algorithm>
#include <random>

#include "ramseykit/errors.hpp"
#include "ramseykit/generators.hpp"
#include "ramseykit/params.hpp"

using namespace rk;

namespace {

Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

// brute force over all vertex subsets
int alpha_brute(const Graph& g) {
    int n = g.order();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if ((mask >> u & 1) && (mask >> v & 1) && g.has_edge(u, v))
                    ok = false;
        if (ok) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

bool cut_brute(const Graph& g, int v) {
    return component_count(delete_vertex(g, v)) > component_count(g);
}

} // namespace

TEST_CASE("independence and clique numbers against brute force") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = random_graph(n, 0.5, rng);
        int a = alpha_brute(g);
        CHECK(independence_number(g) == a);
        CHECK(clique_number(g) == alpha_brute(complement_graph(g)));
        VertexSet s = max_independent_set(g);
        CHECK(s.count() == a);
        // returned set is stable
        auto vs = s.to_vector();
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                CHECK_FALSE(g.has_edge(vs[i], vs[j]));
    }
}

TEST_CASE("max clique is a clique of the right size") {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(9, 0.6, rng);
        auto c = max_clique(g).to_vector();
        CHECK(static_cast<int>(c.size()) == clique_number(g));
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                CHECK(g.has_edge(c[i], c[j]));
    }
}

TEST_CASE("parameter chain holds on all small labeled graphs") {
    for (int n = 1; n <= 5; ++n) {
        int bits = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
            std::vector<std::pair<int, int>> edges;
            int k = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++k)
                    if (mask >> k & 1) edges.emplace_back(u, v);
            Graph g(n, edges);
            for (int v = 0; v < n; ++v) {
                int deg = vertex_param(g, v, Param::degree);
                int al = vertex_param(g, v, Param::alpha);
                int cc = vertex_param(g, v, Param::c);
                int ad = vertex_param(g, v, Param::adh);
                REQUIRE(deg == g.degree(v));
                REQUIRE(deg >= al);
                REQUIRE(al >= cc);
                REQUIRE(cc >= ad);
            }
        }
    }
}

TEST_CASE("adhesion equals the component increment") {
    // K_2: deleting either endpoint leaves one component
    Graph k2(2, {{0, 1}});
    CHECK(adhesion(k2, 0) == 1);
    CHECK(adhesion(k2, 1) == 1);
    // star: centre removal isolates the leaves
    Graph star = named_graph({GraphKind::K_st, 1, 4});
    CHECK(adhesion(star, 0) == 4);
    CHECK(adhesion(star, 1) == 1);
    // isolated vertex has adhesion 0
    Graph e1(1);
    CHECK(adhesion(e1, 0) == 0);
    Graph two(3, {{0, 1}}); // K_2 + isolated vertex
    CHECK(adhesion(two, 2) == 0);
}

TEST_CASE("cut vertices match the deletion oracle") {
    // P_5: the three interior vertices
    Graph p5 = named_graph({GraphKind::P, 5, 0});
    CHECK(cut_vertices(p5).to_vector() == std::vector<int>{1, 2, 3});
    // spider: centre and all middles
    Graph spider = named_graph({GraphKind::K1n_star, 3, 0});
    CHECK(cut_vertices(spider).count() == 4);

    std::mt19937 rng(13);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        Graph g = random_graph(n, 0.4, rng);
        VertexSet cuts = cut_vertices(g);
        for (int v = 0; v < n; ++v) {
            REQUIRE(cuts.test(v) == cut_brute(g, v));
            REQUIRE((adhesion(g, v) >= 2) == cut_brute(g, v));
        }
    }
}

TEST_CASE("nontrivial counts and h-index") {
    Graph k5 = named_graph({GraphKind::K, 5, 0});
    CHECK(nontrivial_count(k5, Param::degree, 2) == 5);
    CHECK(nontrivial_count(k5, Param::alpha, 2) == 0);
    CHECK(h_index(k5, Param::degree) == 4);

    Graph k33 = named_graph({GraphKind::K_st, 3, 3});
    CHECK(h_index(k33, Param::degree) == 3);
    CHECK(h_index(k33, Param::alpha) == 3);

    // p-values 3,3,2,1 give h = 2; 3,3,3,1 gives h = 3
    Graph p4 = named_graph({GraphKind::P, 4, 0});
    std::vector<int> degs = vertex_params(p4, Param::degree);
    CHECK(degs == std::vector<int>{1, 2, 2, 1});
    CHECK(h_index(p4, Param::degree) == 2);
    CHECK(h_index(Graph(3), Param::degree) == 0);
}

TEST_CASE("dominating sets") {
    Graph p4 = named_graph({GraphKind::P, 4, 0});
    CHECK(dominating_set(p4, DomMode::plain).to_vector() ==
          std::vector<int>{0, 2});
    CHECK(dominating_set(p4, DomMode::connected).to_vector() ==
          std::vector<int>{1, 2});
    CHECK(domination_number(p4, DomMode::plain) == 2);

    Graph k5 = named_graph({GraphKind::K, 5, 0});
    CHECK(dominating_set(k5, DomMode::plain).to_vector() ==
          std::vector<int>{0});
    CHECK(dominating_set(k5, DomMode::total).count() == 2);

    // brute-force minimality on random connected graphs
    std::mt19937 rng(14);
    int done = 0;
    while (done < 40) {
        Graph g = random_graph(2 + static_cast<int>(rng() % 6), 0.5, rng);
        if (!is_connected(g)) continue;
        ++done;
        int n = g.order();
        VertexSet got = dominating_set(g, DomMode::plain);
        int best = n;
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            VertexSet cover(n);
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) {
                    cover.set(v);
                    cover |= g.neighbors(v);
                }
            if (cover.count() == n)
                best = std::min(best, __builtin_popcount(mask));
        }
        REQUIRE(got.count() == best);
    }
}

TEST_CASE("every connected dominating set contains every cut vertex") {
    std::mt19937 rng(15);
    int done = 0;
    while (done < 60) {
        Graph g = random_graph(2 + static_cast<int>(rng() % 6), 0.5, rng);
        if (!is_connected(g)) continue;
        ++done;
        int n = g.order();
        VertexSet cuts = cut_vertices(g);
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            VertexSet set(n), cover(n);
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1) {
                    set.set(v);
                    cover.set(v);
                    cover |= g.neighbors(v);
                }
            if (cover.count() != n) continue;
            Induced sub = induced_subgraph(g, set);
            if (!is_connected(sub.graph)) continue;
            REQUIRE(cuts.is_subset_of(set));
        }
    }
}

TEST_CASE("induced matching number") {
    // X = {0,1,2,3}, Y = {4,5}; each y covers two xs: mu' = 2
    Graph tight(6, {{0, 4}, {1, 4}, {2, 5}, {3, 5}});
    InducedMatching im = induced_matching_number(tight);
    CHECK(im.size == 2);
    CHECK(im.edges.size() == 2);
    // star: all edges share the centre: mu' = 1
    Graph fan(4, {{0, 3}, {1, 3}, {2, 3}});
    CHECK(induced_matching_number(fan).size == 1);
    // perfect matching, no cross edges
    Graph pm(6, {{0, 3}, {1, 4}, {2, 5}});
    CHECK(induced_matching_number(pm).size == 3);
    // P_4: the two end edges touch via the middle edge: mu' = 1
    CHECK(induced_matching_number(named_graph({GraphKind::P, 4, 0})).size ==
          1);
}

TEST_CASE("local parameter values on named graphs") {
    // spider centre: neighbourhood is the stable middle set
    Graph spider = named_graph({GraphKind::K1n_star, 4, 0});
    CHECK(vertex_param(spider, 0, Param::degree) == 4);
    CHECK(vertex_param(spider, 0, Param::alpha) == 4);
    CHECK(vertex_param(spider, 0, Param::c) == 4);
    CHECK(vertex_param(spider, 0, Param::adh) == 4);

    // clique-with-pendants: clique vertices see a pendant + the rest
    Graph ks = named_graph({GraphKind::Kn_star, 4, 0});
    CHECK(vertex_param(ks, 0, Param::degree) == 4);
    CHECK(vertex_param(ks, 0, Param::alpha) == 2);
    CHECK(vertex_param(ks, 0, Param::c) == 2);
    CHECK(vertex_param(ks, 0, Param::adh) == 2);
    // pendant
    CHECK(vertex_param(ks, 4, Param::degree) == 1);
    CHECK(vertex_param(ks, 4, Param::adh) == 1);
}
