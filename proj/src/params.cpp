#include "ramseykit/params.hpp"

#include <algorithm>
#include <functional>

#include "ramseykit/bitops.hpp"

namespace rk {

namespace {

void check_cap(const Graph& g, int cap, const char* what) {
    if (g.order() > cap)
        throw cap_exceeded(std::string(what) + ": order " +
                           std::to_string(g.order()) + " exceeds cap " +
                           std::to_string(cap));
}

VertexSet mask_to_set(std::uint64_t mask, int n) {
    VertexSet s(n);
    for (std::uint64_t m = mask; m;) {
        s.set(__builtin_ctzll(m));
        m &= m - 1;
    }
    return s;
}

} // namespace

const char* param_name(Param p) {
    switch (p) {
        case Param::degree: return "deg";
        case Param::alpha: return "alpha";
        case Param::c: return "c";
        case Param::adh: return "adh";
    }
    return "?";
}

std::optional<Param> param_from_name(const std::string& name) {
    if (name == "deg" || name == "degree") return Param::degree;
    if (name == "alpha") return Param::alpha;
    if (name == "c") return Param::c;
    if (name == "adh") return Param::adh;
    return std::nullopt;
}

int independence_number(const Graph& g, int cap) {
    check_cap(g, cap, "independence_number");
    if (g.order() == 0) return 0;
    auto rows = bits::open_rows(g);
    return bits::max_stable(rows, bits::full_mask(g.order()));
}

VertexSet max_independent_set(const Graph& g, int cap) {
    check_cap(g, cap, "max_independent_set");
    if (g.order() == 0) return VertexSet(0);
    auto rows = bits::open_rows(g);
    return mask_to_set(bits::max_stable_lex(rows, bits::full_mask(g.order())),
                       g.order());
}

int clique_number(const Graph& g, int cap) {
    return independence_number(complement_graph(g), cap);
}

VertexSet max_clique(const Graph& g, int cap) {
    return max_independent_set(complement_graph(g), cap);
}

int adhesion(const Graph& g, int v) {
    return component_count(delete_vertex(g, v)) - component_count(g) + 1;
}

int vertex_param(const Graph& g, int v, Param kind) {
    switch (kind) {
        case Param::degree:
            return g.degree(v);
        case Param::alpha: {
            Induced nb = induced_subgraph(g, g.neighbors(v));
            // a neighbourhood is small by definition of the chain's uses,
            // but cap on the host degree regardless
            return independence_number(nb.graph, 64);
        }
        case Param::c: {
            Induced nb = induced_subgraph(g, g.neighbors(v));
            return component_count(nb.graph);
        }
        case Param::adh:
            return adhesion(g, v);
    }
    return 0;
}

std::vector<int> vertex_params(const Graph& g, Param kind) {
    std::vector<int> out(g.order());
    for (int v = 0; v < g.order(); ++v) out[v] = vertex_param(g, v, kind);
    return out;
}

int nontrivial_count(const Graph& g, Param kind, int threshold) {
    int c = 0;
    for (int v = 0; v < g.order(); ++v)
        if (vertex_param(g, v, kind) >= threshold) ++c;
    return c;
}

int h_index(const Graph& g, Param kind) {
    std::vector<int> p = vertex_params(g, kind);
    std::sort(p.rbegin(), p.rend());
    int h = 0;
    for (int k = 1; k <= (int)p.size(); ++k)
        if (p[k - 1] >= k) h = k;
    return h;
}

VertexSet dominating_set(const Graph& g, DomMode mode, int cap) {
    check_cap(g, cap, "dominating_set");
    int n = g.order();
    if (n == 0) return VertexSet(0);
    if (mode == DomMode::connected && !is_connected(g))
        throw disconnected_error("connected domination needs a connected host");

    auto rows = bits::open_rows(g);
    std::vector<std::uint64_t> closed(n);
    for (int v = 0; v < n; ++v) {
        closed[v] = rows[v] | bits::bit(v);
        if (mode == DomMode::total && rows[v] == 0)
            throw bad_parameter("total domination undefined with isolated vertices");
    }
    const auto& cover_rows = (mode == DomMode::total) ? rows : closed;
    std::uint64_t all = bits::full_mask(n);

    // lexicographic k-subset sweep, smallest k first; the first hit is the
    // lexicographically least minimum
    std::vector<int> c;
    for (int k = 1; k <= n; ++k) {
        c.assign(k, 0);
        for (int i = 0; i < k; ++i) c[i] = i;
        for (;;) {
            std::uint64_t cov = 0, mask = 0;
            for (int i = 0; i < k; ++i) {
                cov |= cover_rows[c[i]];
                mask |= bits::bit(c[i]);
            }
            if (cov == all &&
                (mode != DomMode::connected || bits::mask_connected(rows, mask))) {
                return mask_to_set(mask, n);
            }
            int i = k - 1;
            while (i >= 0 && c[i] == n - k + i) --i;
            if (i < 0) break;
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
        }
    }
    // unreachable: the full vertex set always dominates (total mode already
    // rejected isolated vertices)
    return g.vertex_set();
}

int domination_number(const Graph& g, DomMode mode, int cap) {
    return dominating_set(g, mode, cap).count();
}

InducedMatching induced_matching_number(const Graph& g, int cap) {
    check_cap(g, cap, "induced_matching_number");
    auto edges = g.edges();
    int m = (int)edges.size();
    if (m == 0) return {0, {}};

    // conflict[e]: edges that cannot coexist with e in an induced matching
    // (they touch the closed neighbourhood of one of e's endpoints)
    std::vector<std::vector<char>> conflict(m, std::vector<char>(m, 0));
    for (int e = 0; e < m; ++e) {
        VertexSet forb = g.closed_neighborhood(edges[e].first) |
                         g.closed_neighborhood(edges[e].second);
        for (int f = 0; f < m; ++f)
            if (f != e &&
                (forb.test(edges[f].first) || forb.test(edges[f].second)))
                conflict[e][f] = 1;
    }

    // include/exclude over edges in lex order; first maximum found is kept,
    // so the witness is deterministic. nlive counts live edges >= e.
    std::vector<int> best, cur;
    std::function<void(int, const std::vector<char>&, int)> rec =
        [&](int e, const std::vector<char>& live, int nlive) {
            if ((int)cur.size() + nlive <= (int)best.size()) return;
            if (e == m) return;
            if (!live[e]) {
                rec(e + 1, live, nlive);
                return;
            }
            std::vector<char> nxt = live;
            int nn = 0;
            for (int f = e + 1; f < m; ++f) {
                if (nxt[f] && conflict[e][f]) nxt[f] = 0;
                if (nxt[f]) ++nn;
            }
            cur.push_back(e);
            if (cur.size() > best.size()) best = cur;
            rec(e + 1, nxt, nn);
            cur.pop_back();
            rec(e + 1, live, nlive - 1);
        };
    std::vector<char> live(m, 1);
    rec(0, live, m);

    InducedMatching r;
    r.size = (int)best.size();
    for (int e : best) r.edges.push_back(edges[e]);
    return r;
}

VertexSet cut_vertices(const Graph& g) {
    int n = g.order();
    VertexSet cuts(n);
    std::vector<int> disc(n, -1), low(n, 0);
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int v, int parent) {
        disc[v] = low[v] = timer++;
        int children = 0;
        g.neighbors(v).for_each([&](int u) {
            if (u == parent) return;
            if (disc[u] >= 0) {
                low[v] = std::min(low[v], disc[u]);
            } else {
                ++children;
                dfs(u, v);
                low[v] = std::min(low[v], low[u]);
                if (parent >= 0 && low[u] >= disc[v]) cuts.set(v);
            }
        });
        if (parent < 0 && children > 1) cuts.set(v);
    };
    for (int v = 0; v < n; ++v)
        if (disc[v] < 0) dfs(v, -1);
    return cuts;
}

} // namespace rk
