#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramseykit/graph.hpp"

namespace rk {

// Named constructions. Parameters a (and b where noted):
//   K, E, P      order a; C cycle, a >= 3
//   K_st         complete bipartite, parts a and b
//   K1n_star     star K_{1,a} with a pendant on every leaf (order 2a+1)
//   Kn_star      K_a with a pendant on every vertex (order 2a)
//   CK           two copies of K_a joined by a perfect matching (order 2a)
//   T            K_a joined to E_a, plus one vertex adjacent to the E_a side
//   Kn_n         K_a with a pendants on every vertex (order a^2+a)
//   K2_plus_nK1  join of K_2 with a*K_1
//   K1_plus_nK2  join of K_1 with a*K_2
//   K1_plus_nP3  join of K_1 with a*P_3
//   E2_plus_K    join of E_2 with K_a
//   K_plus_E     join of K_a with E_a
//   nP3, nK3     a disjoint copies of P_3 / K_3
//   nK1n         a disjoint copies of the star K_{1,b}
enum class GraphKind {
    K, E, P, C, K_st, K1n_star, Kn_star, CK, T, Kn_n,
    K2_plus_nK1, K1_plus_nK2, K1_plus_nP3, E2_plus_K, K_plus_E,
    nP3, nK3, nK1n,
};

struct GraphName {
    GraphKind kind;
    int a = 0;
    int b = 0;
};

// deterministic labelling, documented per construction in generators.cpp
Graph named_graph(const GraphName& name);

// text syntax: K5, E4, P7, C6, K2,4, K1,4*, K4*, CK3, T3, K3^3,
// K2+4K1, K1+4K2, K1+4P3, E2+K5, K3+E3, 3P3, 3K3, 3K1,3
std::string format_name(const GraphName& name);
std::optional<GraphName> parse_name(const std::string& text);

struct FamilyMember {
    GraphName name;
    Graph graph;
};

// Forbidden-family catalogues, keyed by the vertex parameter whose
// nontrivial count (or h-index) they characterise:
//   deg alpha c adh       connected hosts
//   h-deg h-alpha h-c h-adh   h-index versions (h-c shares h-alpha's family)
//   cor-deg cor-alpha cor-c cor-adh   variants without the connectivity
//                                     hypothesis
const std::vector<std::string>& family_ids();
std::vector<GraphName> family_names(const std::string& family_id, int n);
std::vector<FamilyMember> make_family(const std::string& family_id, int n);

} // namespace rk
