#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "ramseykit/engines.hpp"
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

// random bipartite view on xs/ys with every x covered
Graph random_view(int nx, int ny, int max_y_degree, std::mt19937& rng) {
    int n = nx + ny;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> load(ny, 0);
    for (int x = 0; x < nx; ++x) {
        // attach x to a random y with remaining capacity
        std::vector<int> cand;
        for (int y = 0; y < ny; ++y)
            if (load[y] < max_y_degree) cand.push_back(y);
        if (cand.empty()) break;
        int y = cand[rng() % cand.size()];
        ++load[y];
        edges.emplace_back(x, nx + y);
    }
    return Graph(n, edges);
}

} // namespace

TEST_CASE("matching pairs: private neighbours of a minimal cover") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        int nx = 2 + static_cast<int>(rng() % 6);
        int ny = 1 + static_cast<int>(rng() % 4);
        Graph g = random_view(nx, ny, 3, rng);
        std::vector<int> xs, ys;
        bool covered = true;
        for (int x = 0; x < nx; ++x) {
            xs.push_back(x);
            if (g.degree(x) == 0) covered = false;
        }
        for (int y = 0; y < ny; ++y) ys.push_back(nx + y);
        if (!covered) {
            CHECK_THROWS_AS(matching_pairs_from_view(g, xs, ys),
                            hypothesis_violated);
            continue;
        }
        MatchedPairs mp = matching_pairs_from_view(g, xs, ys);
        // dominating subset still covers all of X
        for (int x : xs) {
            bool dom = false;
            for (int y : mp.dominating)
                if (g.has_edge(x, y)) dom = true;
            REQUIRE(dom);
        }
        // each pair: x adjacent to its y and to no other dominating y
        std::set<int> used_x, used_y;
        for (auto [x, y] : mp.pairs) {
            REQUIRE(g.has_edge(x, y));
            REQUIRE(used_x.insert(x).second);
            REQUIRE(used_y.insert(y).second);
            for (int y2 : mp.dominating)
                if (y2 != y) REQUIRE_FALSE(g.has_edge(x, y2));
        }
        REQUIRE(mp.pairs.size() == mp.dominating.size());
    }
}

TEST_CASE("induced matching extraction meets the counting bound") {
    std::mt19937 rng(32);
    for (auto [n, p] : std::vector<std::pair<int, int>>{
             {2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
        for (int trial = 0; trial < 125; ++trial) {
            int nx = n * (p - 1) + 1 + static_cast<int>(rng() % 3);
            int ny = 1 + static_cast<int>(rng() % (nx + 2));
            Graph g = random_view(nx, ny, n, rng);
            std::vector<int> xs, ys;
            bool covered = true;
            for (int x = 0; x < nx; ++x) {
                xs.push_back(x);
                if (g.degree(x) == 0) covered = false;
            }
            for (int y = 0; y < ny; ++y) ys.push_back(nx + y);
            if (!covered) continue;
            MatchedPairs mp = extract_induced_matching(g, xs, ys, n, p);
            REQUIRE(static_cast<int>(mp.pairs.size()) >= p);
        }
    }
    // the tight instance one below the bound is rejected
    Graph tight(6, {{0, 4}, {1, 4}, {2, 5}, {3, 5}});
    CHECK_THROWS_AS(
        extract_induced_matching(tight, {0, 1, 2, 3}, {4, 5}, 2, 3),
        hypothesis_violated);
}

TEST_CASE("monochromatic clique search against brute force") {
    std::mt19937 rng(33);
    for (int trial = 0; trial < 300; ++trial) {
        int m = 3 + static_cast<int>(rng() % 7);
        int colors = 2 + static_cast<int>(rng() % 2);
        int q = 2 + static_cast<int>(rng() % 2);
        std::map<std::pair<int, int>, int> table;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                table[{i, j}] = static_cast<int>(rng() % colors);
        auto color = [&](int i, int j) { return table.at({i, j}); };
        auto got = find_mono_clique(m, colors, color, q);

        // brute force over all q-subsets
        bool expect = false;
        std::vector<int> pick(q);
        std::function<void(int, int)> rec = [&](int pos, int from) {
            if (expect) return;
            if (pos == q) {
                int c0 = table.at({pick[0], pick[1]});
                for (int i = 0; i < q; ++i)
                    for (int j = i + 1; j < q; ++j)
                        if (table.at({pick[i], pick[j]}) != c0) return;
                expect = true;
                return;
            }
            for (int v = from; v < m; ++v) {
                pick[pos] = v;
                rec(pos + 1, v + 1);
            }
        };
        rec(0, 0);
        REQUIRE(got.has_value() == expect);
        if (got) {
            REQUIRE(static_cast<int>(got->vertices.size()) == q);
            REQUIRE(std::is_sorted(got->vertices.begin(),
                                   got->vertices.end()));
            for (int i = 0; i < q; ++i)
                for (int j = i + 1; j < q; ++j)
                    REQUIRE(table.at({got->vertices[i],
                                      got->vertices[j]}) == got->color);
        }
    }
}

TEST_CASE("mono clique: degenerate shapes") {
    auto zero = [](int, int) { return 0; };
    auto got = find_mono_clique(5, 1, zero, 5);
    REQUIRE(got.has_value());
    CHECK(got->vertices == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(find_mono_clique(3, 1, zero, 4) == std::nullopt);
    CHECK(find_mono_clique(4, 2, zero, 1).has_value());
}

TEST_CASE("multipartite refinement reaches pairwise homogeneity") {
    std::mt19937 rng(34);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 6 + static_cast<int>(rng() % 8);
        Graph g = random_graph(n, 0.5, rng);
        // split [0, n) into 2-4 random parts
        int k = 2 + static_cast<int>(rng() % 3);
        std::vector<std::vector<int>> parts(k);
        for (int v = 0; v < n; ++v) parts[rng() % k].push_back(v);
        parts.erase(std::remove_if(parts.begin(), parts.end(),
                                   [](const auto& p) { return p.empty(); }),
                    parts.end());
        RefineResult r;
        try {
            r = multipartite_refine(g, parts, 1);
        } catch (const parts_too_small&) {
            continue;
        }
        REQUIRE(r.parts.size() == r.complete.size());
        for (std::size_t i = 0; i < r.parts.size(); ++i)
            for (std::size_t j = i + 1; j < r.parts.size(); ++j) {
                bool all = true, none = true;
                for (int u : r.parts[i])
                    for (int v : r.parts[j]) {
                        if (g.has_edge(u, v)) none = false;
                        else all = false;
                    }
                REQUIRE((all || none));
                REQUIRE(static_cast<bool>(r.complete[i][j]) == all);
            }
    }
}

TEST_CASE("multipartite refinement respects minimum sizes") {
    // star centre vs leaves: the leaf part is homogeneous already
    Graph star = named_graph({GraphKind::K_st, 1, 4});
    RefineResult r =
        multipartite_refine(star, {{0}, {1, 2, 3, 4}}, 1);
    CHECK(r.parts[0] == std::vector<int>{0});
    CHECK(r.parts[1].size() == 4);
    CHECK(static_cast<bool>(r.complete[0][1]));

    // P_3 split as {end, middle} vs {end}: mixed, must shrink; min 2 fails
    Graph p3 = named_graph({GraphKind::P, 3, 0});
    CHECK_THROWS_AS(
        multipartite_refine(p3, {{0, 1}, {2}}, 1, {2, 1}),
        parts_too_small);
}

TEST_CASE("longest induced path") {
    bool exact = false;
    Graph p5 = named_graph({GraphKind::P, 5, 0});
    CHECK(longest_induced_path(p5, 16, &exact) ==
          std::vector<int>{0, 1, 2, 3, 4});
    CHECK(exact);

    // a cycle keeps all but one vertex on an induced path
    Graph c6 = named_graph({GraphKind::C, 6, 0});
    CHECK(longest_induced_path(c6, 16, &exact).size() == 5);
    CHECK(exact);

    // complete graph: any edge
    Graph k4 = named_graph({GraphKind::K, 4, 0});
    CHECK(longest_induced_path(k4, 16, &exact).size() == 2);

    // beyond the cap: still a valid induced path, flagged inexact
    Graph big = named_graph({GraphKind::P, 30, 0});
    std::vector<int> path = longest_induced_path(big, 16, &exact);
    CHECK_FALSE(exact);
    REQUIRE(path.size() >= 2);
    for (std::size_t i = 0; i < path.size(); ++i)
        for (std::size_t j = i + 1; j < path.size(); ++j)
            REQUIRE(big.has_edge(path[i], path[j]) == (j == i + 1));
}

TEST_CASE("trichotomy fields") {
    Trichotomy k = path_clique_star(named_graph({GraphKind::K, 5, 0}));
    CHECK(k.clique.size() == 5);

    Trichotomy p = path_clique_star(named_graph({GraphKind::P, 7, 0}));
    CHECK(p.path.size() == 7);
    CHECK(p.path_exact);

    Trichotomy s = path_clique_star(named_graph({GraphKind::K_st, 1, 5}));
    CHECK(s.star_center == 0);
    CHECK(s.star_leaves.size() == 5);
    // leaves really are stable neighbours of the centre
    Graph star = named_graph({GraphKind::K_st, 1, 5});
    for (std::size_t i = 0; i < s.star_leaves.size(); ++i) {
        CHECK(star.has_edge(s.star_center, s.star_leaves[i]));
        for (std::size_t j = i + 1; j < s.star_leaves.size(); ++j)
            CHECK_FALSE(star.has_edge(s.star_leaves[i], s.star_leaves[j]));
    }
}

TEST_CASE("pruning cascades") {
    // spider: pendants, then middles, then the isolated centre
    Graph spider = named_graph({GraphKind::K1n_star, 4, 0});
    PruneLog log = prune(spider, PruneRule::degree1);
    CHECK(log.graph.order() == 0);
    CHECK(log.kept.empty());
    CHECK(log.removed.size() == 9);

    // a cycle has no degree-1 vertex
    Graph c5 = named_graph({GraphKind::C, 5, 0});
    PruneLog keep = prune(c5, PruneRule::degree1);
    CHECK(keep.graph.order() == 5);
    CHECK(keep.removed.empty());
    CHECK(keep.kept == std::vector<int>{0, 1, 2, 3, 4});

    // paths collapse entirely
    CHECK(prune(named_graph({GraphKind::P, 6, 0}), PruneRule::degree1)
              .graph.order() == 0);

    // simplicial rule eats a complete graph
    CHECK(prune(named_graph({GraphKind::K, 5, 0}), PruneRule::alpha1)
              .graph.order() == 0);
    // but leaves a cycle of length 5 alone
    CHECK(prune(c5, PruneRule::alpha1).graph.order() == 5);

    // bookkeeping: kept + removed partition the vertices
    std::mt19937 rng(35);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(8, 0.3, rng);
        for (PruneRule rule : {PruneRule::degree1, PruneRule::alpha1}) {
            PruneLog l = prune(g, rule);
            std::vector<int> all = l.kept;
            all.insert(all.end(), l.removed.begin(), l.removed.end());
            std::sort(all.begin(), all.end());
            std::vector<int> want(8);
            std::iota(want.begin(), want.end(), 0);
            REQUIRE(all == want);
            REQUIRE(l.graph.order() == static_cast<int>(l.kept.size()));
        }
    }
}
