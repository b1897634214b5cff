#include "ramseykit/bitops.hpp"

namespace rk::bits {

namespace {

void stable_rec(const std::vector<std::uint64_t>& rows, std::uint64_t mask,
                int cur, int& best) {
    if (cur + __builtin_popcountll(mask) <= best) return;
    if (!mask) {
        best = cur;
        return;
    }
    // pivot: highest degree inside mask, ties to the smallest label
    int pivot = -1, pdeg = -1;
    for (std::uint64_t m = mask; m;) {
        int v = __builtin_ctzll(m);
        m &= m - 1;
        int d = __builtin_popcountll(rows[v] & mask);
        if (d > pdeg) {
            pdeg = d;
            pivot = v;
        }
    }
    stable_rec(rows, mask & ~(rows[pivot] | bit(pivot)), cur + 1, best);
    stable_rec(rows, mask & ~bit(pivot), cur, best);
}

} // namespace

int max_stable(const std::vector<std::uint64_t>& rows, std::uint64_t mask) {
    int best = 0;
    stable_rec(rows, mask, 0, best);
    return best;
}

std::uint64_t max_stable_lex(const std::vector<std::uint64_t>& rows,
                             std::uint64_t mask) {
    int target = max_stable(rows, mask);
    std::uint64_t chosen = 0, cand = mask;
    int have = 0;
    while (cand && have < target) {
        int v = __builtin_ctzll(cand);
        std::uint64_t rest = cand & ~(rows[v] | bit(v));
        if (have + 1 + max_stable(rows, rest) == target) {
            chosen |= bit(v);
            ++have;
            cand = rest;
        } else {
            cand &= ~bit(v);
        }
    }
    return chosen;
}

bool mask_connected(const std::vector<std::uint64_t>& rows,
                    std::uint64_t mask) {
    if (!mask) return true;
    std::uint64_t seen = bit(__builtin_ctzll(mask));
    for (;;) {
        std::uint64_t grow = seen;
        for (std::uint64_t m = seen; m;) {
            int v = __builtin_ctzll(m);
            m &= m - 1;
            grow |= rows[v] & mask;
        }
        if (grow == seen) break;
        seen = grow;
    }
    return seen == mask;
}

} // namespace rk::bits
