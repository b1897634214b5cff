#include "ramseykit/graph.hpp"

#include <algorithm>

namespace rk {

Induced induced_subgraph(const Graph& g, const VertexSet& keep) {
    assert(keep.universe() == g.order());
    std::vector<int> verts = keep.to_vector();
    std::vector<int> pos(g.order(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = (int)i;

    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        VertexSet nb = g.neighbors(verts[i]) & keep;
        for (int u = nb.next(verts[i]); u >= 0; u = nb.next(u))
            edges.emplace_back((int)i, pos[u]);
    }
    return Induced{Graph((int)verts.size(), edges), std::move(verts)};
}

Induced induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    VertexSet s(g.order());
    for (int v : keep) {
        if (v < 0 || v >= g.order())
            throw invalid_vertex("vertex " + std::to_string(v) + " outside [0," +
                                 std::to_string(g.order()) + ")");
        s.set(v);
    }
    return induced_subgraph(g, s);
}

Graph delete_vertex(const Graph& g, int v) {
    VertexSet keep = g.vertex_set();
    if (v < 0 || v >= g.order())
        throw invalid_vertex("vertex " + std::to_string(v) + " outside [0," +
                             std::to_string(g.order()) + ")");
    keep.reset(v);
    return induced_subgraph(g, keep).graph;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> comps;
    VertexSet seen(g.order());
    for (int s = 0; s < g.order(); ++s) {
        if (seen.test(s)) continue;
        VertexSet comp(g.order());
        std::vector<int> stack{s};
        comp.set(s);
        seen.set(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            g.neighbors(v).for_each([&](int u) {
                if (!seen.test(u)) {
                    seen.set(u);
                    comp.set(u);
                    stack.push_back(u);
                }
            });
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

int component_count(const Graph& g) { return (int)components(g).size(); }

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

Graph join_graphs(const Graph& g1, const Graph& g2) {
    int n1 = g1.order(), n2 = g2.order();
    std::vector<std::pair<int, int>> edges = g1.edges();
    for (auto [u, v] : g2.edges()) edges.emplace_back(u + n1, v + n1);
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v) edges.emplace_back(u, n1 + v);
    return Graph(n1 + n2, edges);
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    int n1 = g1.order();
    std::vector<std::pair<int, int>> edges = g1.edges();
    for (auto [u, v] : g2.edges()) edges.emplace_back(u + n1, v + n1);
    return Graph(n1 + g2.order(), edges);
}

Graph disjoint_copies(const Graph& g, int k) {
    if (k < 1) throw bad_parameter("disjoint_copies needs k >= 1");
    std::vector<std::pair<int, int>> edges;
    auto base = g.edges();
    for (int i = 0; i < k; ++i)
        for (auto [u, v] : base)
            edges.emplace_back(u + i * g.order(), v + i * g.order());
    return Graph(k * g.order(), edges);
}

Graph complement_graph(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph(g.order(), edges);
}

} // namespace rk
