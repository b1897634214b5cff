#pragma once

#include <string>
#include <vector>

#include "ramseykit/graph.hpp"

namespace rk {

// embedding[i] = host vertex carrying pattern vertex i (induced, injective)
using Embedding = std::vector<int>;

bool verify_embedding(const Graph& host, const Graph& pattern,
                      const Embedding& emb);

struct SearchLimits {
    long node_budget = 20'000'000; // candidate placements tried
};

enum class SearchStatus { found, absent, budget_exhausted };

struct InducedSearch {
    SearchStatus status;
    Embedding embedding; // set iff found
    long nodes = 0;
};

// Lexicographically least induced embedding of `pattern` into `host`
// (pattern vertices mapped in natural order, candidates ascending).
// absent is a complete-search verdict; budget_exhausted is not.
InducedSearch find_induced(const Graph& host, const Graph& pattern,
                           const SearchLimits& limits = {});

enum class Freeness { free, not_free, inconclusive };

struct FreenessReport {
    Freeness verdict;
    int member = -1;      // index of the embedded member if not_free,
                          // first inconclusive member if inconclusive
    Embedding embedding;  // set iff not_free
    long nodes = 0;
};

// members tried in catalogue order; first embedding wins
FreenessReport is_family_free(const Graph& g, const std::vector<Graph>& family,
                              const SearchLimits& limits = {});

struct FamilyLe {
    bool holds;
    bool inconclusive; // some certificate search hit the budget
    // one entry per right member: index of the left member embedded into it
    // plus the embedding; left == -1 when none exists
    struct Cert {
        int left;
        Embedding embedding;
    };
    std::vector<Cert> certificates;
};

// left <= right: every member of `right` induced-contains some member of
// `left` (so left-freeness implies right-freeness)
FamilyLe family_le(const std::vector<Graph>& left,
                   const std::vector<Graph>& right,
                   const SearchLimits& limits = {});

inline constexpr int kDefaultIsoCap = 24;

struct Canonical {
    Graph graph;               // canonical representative
    std::vector<int> relabel;  // relabel[i] = original vertex at position i
};

// Canonical form minimising the graph6 bit sequence over all labellings
// (exhaustive prefix search with twin pruning). The canonical key of a
// graph is therefore the lexicographically least graph6 string of its
// isomorphism class.
Canonical canonical_form(const Graph& g, int cap = kDefaultIsoCap);
std::string canonical_key(const Graph& g, int cap = kDefaultIsoCap);

bool are_isomorphic(const Graph& g, const Graph& h, int cap = kDefaultIsoCap);

} // namespace rk
