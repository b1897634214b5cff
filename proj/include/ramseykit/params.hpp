#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramseykit/graph.hpp"

namespace rk {

// Per-vertex parameters. For every vertex the chain
//   deg(v) >= alpha(N(v)) >= c(N(v)) >= adh(v)
// holds, where alpha is the stable number of the induced neighbourhood,
// c its component count, and adh(v) = c(G - v) - c(G) + 1.
enum class Param { degree, alpha, c, adh };

const char* param_name(Param p);
std::optional<Param> param_from_name(const std::string& name);

// exact searches refuse orders beyond this unless told otherwise
inline constexpr int kDefaultExactCap = 24;

int independence_number(const Graph& g, int cap = kDefaultExactCap);
// lexicographically least maximum stable set
VertexSet max_independent_set(const Graph& g, int cap = kDefaultExactCap);
int clique_number(const Graph& g, int cap = kDefaultExactCap);
VertexSet max_clique(const Graph& g, int cap = kDefaultExactCap);

int vertex_param(const Graph& g, int v, Param kind);
std::vector<int> vertex_params(const Graph& g, Param kind);

// adh(v); 0 for an isolated vertex (and for the one-vertex graph)
int adhesion(const Graph& g, int v);

// #{v : param(v) >= threshold}
int nontrivial_count(const Graph& g, Param kind, int threshold = 2);

// largest k >= 1 with at least k vertices of parameter >= k; 0 if none
int h_index(const Graph& g, Param kind);

enum class DomMode { plain, connected, total };

// minimum dominating set, lexicographically least among the minima.
// connected mode requires a connected host; total mode requires no
// isolated vertices.
VertexSet dominating_set(const Graph& g, DomMode mode,
                         int cap = kDefaultExactCap);
int domination_number(const Graph& g, DomMode mode,
                      int cap = kDefaultExactCap);

struct InducedMatching {
    int size;
    std::vector<std::pair<int, int>> edges; // deterministic witness
};

// largest induced matching: pairwise disjoint edges with no edge of the
// host between any two of them
InducedMatching induced_matching_number(const Graph& g,
                                        int cap = kDefaultExactCap);

// articulation points (Tarjan); equals {v : adh(v) >= 2} on every graph
VertexSet cut_vertices(const Graph& g);

} // namespace rk
