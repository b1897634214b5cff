#pragma once

#include <cassert>
#include <cstdint>
#include <utility>
#include <vector>

#include "ramseykit/errors.hpp"

namespace rk {

// Set of vertex ids over a fixed universe [0, n). Bit-packed; one inline word
// covers the common case (n <= 64), larger universes spill into more words.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe)
        : n_(universe), w_((universe + 63) / 64, 0) {}

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int i = 0; i < universe; ++i) s.set(i);
        return s;
    }

    int universe() const { return n_; }

    bool test(int v) const {
        assert(v >= 0 && v < n_);
        return (w_[v >> 6] >> (v & 63)) & 1u;
    }
    void set(int v) {
        assert(v >= 0 && v < n_);
        w_[v >> 6] |= std::uint64_t(1) << (v & 63);
    }
    void reset(int v) {
        assert(v >= 0 && v < n_);
        w_[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
    }

    int count() const {
        int c = 0;
        for (auto w : w_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }

    // smallest member, or -1
    int first() const { return next(-1); }
    // smallest member > v, or -1
    int next(int v) const {
        int i = (v < 0) ? 0 : (v + 1) >> 6;
        std::uint64_t mask = (v < 0) ? ~std::uint64_t(0)
                                     : ~std::uint64_t(0) << ((v + 1) & 63);
        if (v >= 0 && ((v + 1) & 63) == 0) mask = ~std::uint64_t(0);
        for (; i < (int)w_.size(); ++i) {
            std::uint64_t w = w_[i] & mask;
            if (w) return i * 64 + __builtin_ctzll(w);
            mask = ~std::uint64_t(0);
        }
        return -1;
    }

    VertexSet& operator&=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    // set difference
    VertexSet& operator-=(const VertexSet& o) {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    // complement within the universe
    VertexSet complement() const {
        VertexSet r(n_);
        for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
        r.trim();
        return r;
    }

    bool intersects(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool is_subset_of(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    std::vector<int> to_vector() const {
        std::vector<int> r;
        for (int v = first(); v >= 0; v = next(v)) r.push_back(v);
        return r;
    }

    template <class F>
    void for_each(F f) const {
        for (int v = first(); v >= 0; v = next(v)) f(v);
    }

    std::uint64_t word(int i) const { return w_[i]; }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

private:
    void trim() {
        if (n_ & 63) w_.back() &= (std::uint64_t(1) << (n_ & 63)) - 1;
    }

    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Simple undirected graph on vertices 0..n-1, no loops, no multi-edges.
// Immutable after construction; all operations build new graphs.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n, VertexSet(n)) {
        if (n < 0) throw bad_parameter("graph order must be >= 0");
    }
    Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge_internal(u, v);
    }

    int order() const { return n_; }
    long size() const { return m_; } // number of edges

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj_[u].test(v);
    }
    int degree(int v) const {
        check_vertex(v);
        return adj_[v].count();
    }
    const VertexSet& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }
    VertexSet closed_neighborhood(int v) const {
        VertexSet s = neighbors(v);
        s.set(v);
        return s;
    }

    VertexSet vertex_set() const { return VertexSet::full(n_); }

    // edges in lexicographic order (u < v)
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        e.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v))
                e.emplace_back(u, v);
        return e;
    }

    // adjacency row as one machine word; only valid for order <= 64
    std::uint64_t row64(int v) const {
        assert(n_ <= 64);
        check_vertex(v);
        return n_ == 0 ? 0 : adj_[v].word(0);
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw invalid_vertex("vertex " + std::to_string(v) +
                                 " outside [0," + std::to_string(n_) + ")");
    }
    void add_edge_internal(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw self_loop("self loop at vertex " + std::to_string(u));
        if (!adj_[u].test(v)) {
            adj_[u].set(v);
            adj_[v].set(u);
            ++m_;
        }
    }

    int n_ = 0;
    long m_ = 0;
    std::vector<VertexSet> adj_;
};

// Induced subgraph plus the label mapping back into the host:
// new vertex i corresponds to host vertex vertices[i] (ascending).
struct Induced {
    Graph graph;
    std::vector<int> vertices;
};

Induced induced_subgraph(const Graph& g, const VertexSet& keep);
Induced induced_subgraph(const Graph& g, const std::vector<int>& keep);
Graph delete_vertex(const Graph& g, int v);

// connected components, each a VertexSet over the host universe,
// ordered by their minimum vertex
std::vector<VertexSet> components(const Graph& g);
int component_count(const Graph& g);
bool is_connected(const Graph& g); // true for orders 0 and 1

// join: all of g1, all of g2 (labels shifted by |g1|), plus every cross edge
Graph join_graphs(const Graph& g1, const Graph& g2);
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph disjoint_copies(const Graph& g, int k);
Graph complement_graph(const Graph& g);

} // namespace rk
