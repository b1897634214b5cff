#include "ramseykit/engines.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <string>

#include "ramseykit/bitops.hpp"
#include "ramseykit/errors.hpp"
#include "ramseykit/params.hpp"

namespace rk {

namespace {

VertexSet coverage(const Graph& g, int y, const VertexSet& xset) {
    return g.neighbors(y) & xset;
}

} // namespace

MatchedPairs matching_pairs_from_view(const Graph& g,
                                      const std::vector<int>& xs,
                                      const std::vector<int>& ys) {
    VertexSet xset(g.order()), yset(g.order());
    for (int x : xs) xset.set(x);
    for (int y : ys) yset.set(y);
    for (int x : xs)
        if (!g.neighbors(x).intersects(yset))
            throw hypothesis_violated("vertex " + std::to_string(x) +
                                      " has no neighbour on the Y side");

    std::vector<int> dom = ys;
    std::sort(dom.begin(), dom.end());
    // drop by descending label while domination of xs survives
    for (int i = static_cast<int>(dom.size()) - 1; i >= 0; --i) {
        VertexSet cov(g.order());
        for (int j = 0; j < static_cast<int>(dom.size()); ++j)
            if (j != i) cov |= coverage(g, dom[j], xset);
        if (xset.is_subset_of(cov)) dom.erase(dom.begin() + i);
    }

    MatchedPairs out;
    out.dominating = dom;
    for (int y : dom) {
        int priv = -1;
        for (int x : xs) {
            if (!g.has_edge(x, y)) continue;
            bool only = true;
            for (int y2 : dom)
                if (y2 != y && g.has_edge(x, y2)) {
                    only = false;
                    break;
                }
            if (only && (priv < 0 || x < priv)) priv = x;
        }
        assert(priv >= 0); // minimality certifies a private neighbour
        out.pairs.emplace_back(priv, y);
    }
    return out;
}

MatchedPairs extract_induced_matching(const Graph& g,
                                      const std::vector<int>& xs,
                                      const std::vector<int>& ys,
                                      int max_y_degree, int target_pairs) {
    VertexSet xset(g.order());
    for (int x : xs) xset.set(x);
    for (int y : ys) {
        int d = (g.neighbors(y) & xset).count();
        if (d > max_y_degree)
            throw hypothesis_violated(
                "vertex " + std::to_string(y) + " has " + std::to_string(d) +
                " X-neighbours, more than " + std::to_string(max_y_degree));
    }
    long need = static_cast<long>(max_y_degree) * (target_pairs - 1) + 1;
    if (static_cast<long>(xs.size()) < need)
        throw hypothesis_violated("|X| = " + std::to_string(xs.size()) +
                                  " is below " + std::to_string(need));
    MatchedPairs out = matching_pairs_from_view(g, xs, ys);
    // each dominating vertex covers <= max_y_degree of the xs
    assert(static_cast<int>(out.pairs.size()) >= target_pairs);
    return out;
}

std::optional<ColoredClique>
find_mono_clique(int m, int colors, const std::function<int(int, int)>& color,
                 int q) {
    assert(m >= 0 && colors >= 1 && q >= 1);
    auto col = [&](int i, int j) {
        int c = color(std::min(i, j), std::max(i, j));
        assert(c >= 0 && c < colors);
        return c;
    };
    if (q > m) return std::nullopt;
    if (q == 1) return ColoredClique{{0}, 0};

    // pivot chain: repeatedly keep the largest colour class of the pivot
    std::vector<int> live(m);
    for (int i = 0; i < m; ++i) live[i] = i;
    std::vector<std::pair<int, int>> tagged; // (pivot, tag)
    while (live.size() > 1) {
        int pivot = live.front();
        std::map<int, std::vector<int>> classes;
        for (std::size_t i = 1; i < live.size(); ++i)
            classes[col(pivot, live[i])].push_back(live[i]);
        auto best = classes.begin();
        for (auto it = classes.begin(); it != classes.end(); ++it)
            if (it->second.size() > best->second.size()) best = it;
        tagged.emplace_back(pivot, best->first);
        live = best->second;
    }
    for (int c = 0; c < colors; ++c) {
        std::vector<int> take;
        for (auto& [p, tag] : tagged)
            if (tag == c) take.push_back(p);
        // the last survivor matches every pivot's tag
        if (static_cast<int>(take.size()) == q - 1 && !live.empty())
            take.push_back(live.front());
        if (static_cast<int>(take.size()) >= q) {
            take.resize(q);
            std::sort(take.begin(), take.end());
            for (int i = 0; i < q; ++i)
                for (int j = i + 1; j < q; ++j)
                    assert(col(take[i], take[j]) == c);
            return ColoredClique{take, c};
        }
    }

    // exhaustive fallback over the colours actually present
    if (m > 64)
        throw cap_exceeded("find_mono_clique: exhaustive fallback needs "
                           "at most 64 vertices, got " +
                           std::to_string(m));
    std::vector<int> present;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) present.push_back(col(i, j));
    std::sort(present.begin(), present.end());
    present.erase(std::unique(present.begin(), present.end()), present.end());
    for (int c : present) {
        std::vector<std::uint64_t> non(m, 0); // complement rows of colour c
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (col(i, j) != c) {
                    non[i] |= bits::bit(j);
                    non[j] |= bits::bit(i);
                }
        if (bits::max_stable(non, bits::full_mask(m)) < q) continue;
        std::uint64_t lex = bits::max_stable_lex(non, bits::full_mask(m));
        std::vector<int> clique;
        for (int v = 0; v < m && static_cast<int>(clique.size()) < q; ++v)
            if (lex >> v & 1) clique.push_back(v);
        return ColoredClique{clique, c};
    }
    return std::nullopt;
}

RefineResult multipartite_refine(const Graph& g,
                                 std::vector<std::vector<int>> parts,
                                 int min_size,
                                 const std::vector<int>& min_sizes) {
    const int t = static_cast<int>(parts.size());
    assert(min_sizes.empty() || static_cast<int>(min_sizes.size()) == t);
    auto limit = [&](int i) {
        return min_sizes.empty() ? min_size : min_sizes[i];
    };
    for (int i = 0; i < t; ++i) {
        std::sort(parts[i].begin(), parts[i].end());
        if (static_cast<int>(parts[i].size()) < limit(i))
            throw parts_too_small("refinement part below " +
                                  std::to_string(limit(i)));
    }
    RefineResult out;
    out.complete.assign(t, std::vector<char>(t, 0));
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j) {
            // make every x in part i uniform towards part j
            for (int x : parts[i]) {
                std::vector<int> nb, nnb;
                for (int u : parts[j])
                    (g.has_edge(x, u) ? nb : nnb).push_back(u);
                parts[j] = nb.size() > nnb.size() ? nb : nnb;
                if (static_cast<int>(parts[j].size()) < limit(j))
                    throw parts_too_small("refinement part below " +
                                          std::to_string(limit(j)));
            }
            // split part i by its now-uniform type, keep the larger side
            std::vector<int> joined, apart;
            for (int x : parts[i])
                (g.has_edge(x, parts[j].front()) ? joined : apart).push_back(x);
            bool keep_joined = joined.size() > apart.size();
            parts[i] = keep_joined ? joined : apart;
            if (static_cast<int>(parts[i].size()) < limit(i))
                throw parts_too_small("refinement part below " +
                                      std::to_string(limit(i)));
            out.complete[i][j] = out.complete[j][i] = keep_joined ? 1 : 0;
        }
    // later pairs only shrank parts, so earlier homogeneity persists
#ifndef NDEBUG
    for (int i = 0; i < t; ++i)
        for (int j = i + 1; j < t; ++j)
            for (int x : parts[i])
                for (int u : parts[j])
                    assert(g.has_edge(x, u) == (out.complete[i][j] == 1));
#endif
    out.parts = std::move(parts);
    return out;
}

namespace {

// exhaustive longest induced path, states (mask, last) expanded once
struct path_dfs {
    const std::vector<std::uint64_t>& rows;
    int n;
    std::vector<bool> seen;
    std::vector<int> cur, best;

    path_dfs(const std::vector<std::uint64_t>& r, int order)
        : rows(r), n(order), seen(static_cast<std::size_t>(order) << order,
                                  false) {}

    void run(std::uint64_t mask, int last) {
        std::size_t id = static_cast<std::size_t>(mask) * n + last;
        if (seen[id]) return;
        seen[id] = true;
        if (cur.size() > best.size()) best = cur;
        for (int v = 0; v < n; ++v) {
            if (mask >> v & 1) continue;
            if ((rows[v] & mask) != bits::bit(last)) continue;
            cur.push_back(v);
            run(mask | bits::bit(v), v);
            cur.pop_back();
        }
    }
};

std::vector<int> bfs_tree(const Graph& g, int src, std::vector<int>& dist) {
    std::vector<int> parent(g.order(), -1);
    dist.assign(g.order(), -1);
    std::vector<int> queue{src};
    dist[src] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        g.neighbors(u).for_each([&](int v) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                parent[v] = u;
                queue.push_back(v);
            }
        });
    }
    return parent;
}

std::vector<int> double_sweep_path(const Graph& g, const std::vector<int>& comp) {
    std::vector<int> dist;
    bfs_tree(g, comp.front(), dist);
    int a = comp.front();
    for (int v : comp)
        if (dist[v] > dist[a]) a = v;
    std::vector<int> parent = bfs_tree(g, a, dist);
    int b = a;
    for (int v : comp)
        if (dist[v] > dist[b]) b = v;
    std::vector<int> path;
    for (int v = b; v >= 0; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path; // a shortest path, hence induced
}

} // namespace

std::vector<int> longest_induced_path(const Graph& g, int cap, bool* exact) {
    if (exact) *exact = true;
    if (g.order() == 0) return {};
    if (g.order() <= cap && g.order() <= 20) { // state table: order * 2^order
        auto rows = bits::open_rows(g);
        path_dfs dfs(rows, g.order());
        for (int v = 0; v < g.order(); ++v) {
            dfs.cur = {v};
            dfs.run(bits::bit(v), v);
        }
        return dfs.best;
    }
    if (exact) *exact = false;
    std::vector<int> best;
    for (const auto& comp : components(g)) {
        std::vector<int> p = double_sweep_path(g, comp.to_vector());
        if (p.size() > best.size()) best = p;
    }
    return best;
}

Trichotomy path_clique_star(const Graph& g, int path_cap) {
    Trichotomy out;
    out.clique = max_clique(g, 64).to_vector();
    out.path = longest_induced_path(g, path_cap, &out.path_exact);
    int best_alpha = -1;
    for (int v = 0; v < g.order(); ++v) {
        Induced nb = induced_subgraph(g, g.neighbors(v));
        int a = independence_number(nb.graph, 64);
        if (a > best_alpha) {
            best_alpha = a;
            out.star_center = v;
            out.star_leaves.clear();
            for (int u : max_independent_set(nb.graph, 64).to_vector())
                out.star_leaves.push_back(nb.vertices[u]);
        }
    }
    return out;
}

namespace {

bool neighborhood_is_clique(const Graph& g, int v) {
    std::vector<int> nb = g.neighbors(v).to_vector();
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (!g.has_edge(nb[i], nb[j])) return false;
    return true;
}

} // namespace

PruneLog prune(const Graph& g, PruneRule rule) {
    Graph cur = g;
    std::vector<int> labels(g.order());
    for (int v = 0; v < g.order(); ++v) labels[v] = v;
    std::vector<int> removed;
    for (;;) {
        int victim = -1;
        for (int v = 0; v < cur.order() && victim < 0; ++v) {
            bool hit = rule == PruneRule::degree1
                           ? cur.degree(v) <= 1
                           : neighborhood_is_clique(cur, v);
            if (hit) victim = v;
        }
        if (victim < 0) break;
        removed.push_back(labels[victim]);
        labels.erase(labels.begin() + victim);
        cur = delete_vertex(cur, victim);
    }
    return {cur, labels, removed};
}

} // namespace rk
