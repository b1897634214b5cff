#pragma once

#include <cstdint>
#include <vector>

#include "ramseykit/graph.hpp"

// Word-packed helpers for exhaustive searches on graphs of order <= 64.
// Callers are responsible for enforcing their own order caps.

namespace rk::bits {

inline std::uint64_t bit(int v) { return std::uint64_t(1) << v; }

inline std::vector<std::uint64_t> open_rows(const Graph& g) {
    assert(g.order() <= 64);
    std::vector<std::uint64_t> rows(g.order());
    for (int v = 0; v < g.order(); ++v) rows[v] = g.row64(v);
    return rows;
}

inline std::uint64_t full_mask(int n) {
    return n >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
}

// maximum stable set size within `mask`
int max_stable(const std::vector<std::uint64_t>& rows, std::uint64_t mask);

// lexicographically least maximum stable set within `mask`
std::uint64_t max_stable_lex(const std::vector<std::uint64_t>& rows,
                             std::uint64_t mask);

// true iff `mask` induces a connected subgraph (empty and singletons count
// as connected)
bool mask_connected(const std::vector<std::uint64_t>& rows,
                    std::uint64_t mask);

} // namespace rk::bits
