#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "ramseykit/graph.hpp"

namespace rk {

// -------- induced matching via private neighbours --------

struct MatchedPairs {
    // (x, y) with y in the dominating set and x a private X-neighbour of y:
    // x is adjacent to y and to no other member of the dominating set
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> dominating; // minimal subset of ys dominating xs
};

// Shrinks ys to a minimal subset dominating xs (removal attempts by
// descending label), then pairs each survivor with its smallest private
// neighbour. Throws hypothesis_violated if some x has no neighbour in ys.
MatchedPairs matching_pairs_from_view(const Graph& g,
                                      const std::vector<int>& xs,
                                      const std::vector<int>& ys);

// Size-guaranteed wrapper: additionally checks that every y has at most
// max_y_degree neighbours in xs and that |xs| >= max_y_degree *
// (target_pairs - 1) + 1, which forces at least target_pairs pairs.
MatchedPairs extract_induced_matching(const Graph& g,
                                      const std::vector<int>& xs,
                                      const std::vector<int>& ys,
                                      int max_y_degree, int target_pairs);

// -------- monochromatic clique in an edge-coloured complete graph --------

struct ColoredClique {
    std::vector<int> vertices; // ascending
    int color;
};

// color(i, j) is queried with i < j and must return a value in
// [0, colors). Tries the pivot-chain construction first and falls back to
// an exhaustive per-colour clique search (m <= 64); nullopt therefore
// certifies that no q vertices are pairwise joined in one colour.
std::optional<ColoredClique>
find_mono_clique(int m, int colors, const std::function<int(int, int)>& color,
                 int q);

// -------- pairwise-homogeneous refinement of a vertex partition --------

struct RefineResult {
    std::vector<std::vector<int>> parts; // subsets of the input parts
    // complete[i][j] == 1 iff parts i and j end up fully joined
    std::vector<std::vector<char>> complete;
};

// Shrinks the given disjoint parts until every pair of parts is either
// fully joined or fully non-adjacent (majority splits, ties kept on the
// non-adjacent side). Parts may stay internally mixed. Throws
// parts_too_small once any part would drop below its minimum size
// (min_sizes[i] when given, min_size otherwise).
RefineResult multipartite_refine(const Graph& g,
                                 std::vector<std::vector<int>> parts,
                                 int min_size,
                                 const std::vector<int>& min_sizes = {});

// -------- clique / induced path / induced star trichotomy --------

// A longest induced path when order <= cap (exhaustive, deterministic);
// otherwise a double-sweep shortest-path lower bound inside the largest
// component. *exact reports which case ran.
std::vector<int> longest_induced_path(const Graph& g, int cap = 16,
                                      bool* exact = nullptr);

struct Trichotomy {
    std::vector<int> clique;      // lexicographically least maximum clique
    std::vector<int> path;        // see longest_induced_path
    bool path_exact;
    int star_center = -1;         // maximises alpha(N(v)), ties to smallest
    std::vector<int> star_leaves; // least maximum stable set in N(center)
};

Trichotomy path_clique_star(const Graph& g, int path_cap = 16);

// -------- iterated vertex pruning --------

enum class PruneRule {
    degree1, // delete vertices of degree <= 1
    alpha1,  // delete vertices whose neighbourhood is a clique
};

struct PruneLog {
    Graph graph;              // pruned graph
    std::vector<int> kept;    // surviving original labels, ascending
    std::vector<int> removed; // deleted original labels, deletion order
};

// Repeatedly deletes the smallest-label qualifying vertex until none
// qualifies. alpha1 deletions never disconnect a component.
PruneLog prune(const Graph& g, PruneRule rule);

} // namespace rk
