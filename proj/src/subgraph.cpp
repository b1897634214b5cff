#include "ramseykit/subgraph.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <unordered_set>

#include "ramseykit/bitops.hpp"
#include "ramseykit/errors.hpp"
#include "ramseykit/graph6.hpp"

namespace rk {

bool verify_embedding(const Graph& host, const Graph& pattern,
                      const Embedding& emb) {
    if (static_cast<int>(emb.size()) != pattern.order()) return false;
    for (int v : emb)
        if (v < 0 || v >= host.order()) return false;
    for (std::size_t i = 0; i < emb.size(); ++i)
        for (std::size_t j = i + 1; j < emb.size(); ++j) {
            if (emb[i] == emb[j]) return false;
            if (host.has_edge(emb[i], emb[j]) !=
                pattern.has_edge(static_cast<int>(i), static_cast<int>(j)))
                return false;
        }
    return true;
}

namespace {

struct induced_searcher {
    const Graph& g;
    const Graph& h;
    long budget;
    long nodes = 0;
    bool exhausted = false;
    std::vector<int> map;
    std::vector<char> used;

    induced_searcher(const Graph& host, const Graph& pattern, long b)
        : g(host), h(pattern), budget(b), map(pattern.order(), -1),
          used(host.order(), 0) {}

    bool rec(int k) {
        if (k == h.order()) return true;
        for (int v = 0; v < g.order(); ++v) {
            if (used[v] || g.degree(v) < h.degree(k)) continue;
            if (++nodes > budget) {
                exhausted = true;
                return false;
            }
            bool ok = true;
            for (int j = 0; j < k && ok; ++j)
                ok = g.has_edge(v, map[j]) == h.has_edge(k, j);
            if (!ok) continue;
            map[k] = v;
            used[v] = 1;
            if (rec(k + 1)) return true;
            used[v] = 0;
            if (exhausted) return false;
        }
        return false;
    }
};

} // namespace

InducedSearch find_induced(const Graph& host, const Graph& pattern,
                           const SearchLimits& limits) {
    if (pattern.order() > host.order())
        return {SearchStatus::absent, {}, 0};
    induced_searcher s(host, pattern, limits.node_budget);
    if (s.rec(0)) {
        assert(verify_embedding(host, pattern, s.map));
        return {SearchStatus::found, s.map, s.nodes};
    }
    if (s.exhausted) return {SearchStatus::budget_exhausted, {}, s.nodes};
    return {SearchStatus::absent, {}, s.nodes};
}

FreenessReport is_family_free(const Graph& g, const std::vector<Graph>& family,
                              const SearchLimits& limits) {
    FreenessReport rep{Freeness::free, -1, {}, 0};
    int first_unknown = -1;
    for (std::size_t i = 0; i < family.size(); ++i) {
        InducedSearch s = find_induced(g, family[i], limits);
        rep.nodes += s.nodes;
        if (s.status == SearchStatus::found) {
            rep.verdict = Freeness::not_free;
            rep.member = static_cast<int>(i);
            rep.embedding = s.embedding;
            return rep;
        }
        if (s.status == SearchStatus::budget_exhausted && first_unknown < 0)
            first_unknown = static_cast<int>(i);
    }
    if (first_unknown >= 0) {
        rep.verdict = Freeness::inconclusive;
        rep.member = first_unknown;
    }
    return rep;
}

FamilyLe family_le(const std::vector<Graph>& left,
                   const std::vector<Graph>& right,
                   const SearchLimits& limits) {
    FamilyLe out{true, false, {}};
    for (const Graph& r : right) {
        FamilyLe::Cert cert{-1, {}};
        bool unknown = false;
        for (std::size_t i = 0; i < left.size(); ++i) {
            InducedSearch s = find_induced(r, left[i], limits);
            if (s.status == SearchStatus::found) {
                cert.left = static_cast<int>(i);
                cert.embedding = s.embedding;
                break;
            }
            if (s.status == SearchStatus::budget_exhausted) unknown = true;
        }
        if (cert.left < 0) {
            out.holds = false;
            if (unknown) out.inconclusive = true;
        }
        out.certificates.push_back(std::move(cert));
    }
    return out;
}

namespace {

// u and w are interchangeable by a transposition automorphism
bool twin_pair(const std::vector<std::uint64_t>& rows, int u, int w) {
    return (rows[u] & ~bits::bit(w)) == (rows[w] & ~bits::bit(u));
}

} // namespace

Canonical canonical_form(const Graph& g, int cap) {
    const int n = g.order();
    if (n > cap || n > 64)
        throw cap_exceeded("canonical_form: order " + std::to_string(n) +
                           " exceeds cap " + std::to_string(std::min(cap, 64)));
    if (n == 0) return {Graph(), {}};
    const auto rows = bits::open_rows(g);

    // breadth-first over labelling prefixes, keeping exactly the prefixes
    // that realise the least graph6 bit sequence so far; column k has a
    // fixed width of k bits, so level-wise minimisation is lexicographic
    // minimisation of the whole sequence
    std::vector<std::vector<int>> prefixes{{}};
    std::vector<std::uint64_t> used_masks{0};
    for (int k = 0; k < n; ++k) {
        std::uint64_t best = 0;
        bool have = false;
        std::vector<std::vector<int>> next;
        std::vector<std::uint64_t> next_used;
        for (std::size_t ci = 0; ci < prefixes.size(); ++ci) {
            const std::uint64_t used = used_masks[ci];
            for (int u = 0; u < n; ++u) {
                if (used >> u & 1) continue;
                // a smaller unused twin reaches the same minimum
                bool skip = false;
                for (int w = 0; w < u && !skip; ++w)
                    skip = !(used >> w & 1) && twin_pair(rows, u, w);
                if (skip) continue;
                std::uint64_t col = 0;
                for (int j = 0; j < k; ++j)
                    col = col << 1 | (rows[u] >> prefixes[ci][j] & 1);
                if (!have || col < best) {
                    have = true;
                    best = col;
                    next.clear();
                    next_used.clear();
                }
                if (col == best) {
                    next.push_back(prefixes[ci]);
                    next.back().push_back(u);
                    next_used.push_back(used | bits::bit(u));
                }
            }
        }
        // prefixes over the same vertex set are NOT interchangeable: the
        // remaining columns read adjacency bits in prefix order, so every
        // minimal ordering must be kept (twin pruning bounds the frontier)
        if (next.size() > 200000)
            throw cap_exceeded("canonical_form: search frontier too large");
        prefixes = std::move(next);
        used_masks = std::move(next_used);
    }

    const std::vector<int>& perm = prefixes.front();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rows[perm[i]] >> perm[j] & 1) edges.emplace_back(i, j);
    return {Graph(n, edges), perm};
}

std::string canonical_key(const Graph& g, int cap) {
    return to_graph6(canonical_form(g, cap).graph);
}

bool are_isomorphic(const Graph& g, const Graph& h, int cap) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    std::vector<int> dg(g.order()), dh(h.order());
    for (int v = 0; v < g.order(); ++v) dg[v] = g.degree(v);
    for (int v = 0; v < h.order(); ++v) dh[v] = h.degree(v);
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    return canonical_key(g, cap) == canonical_key(h, cap);
}

} // namespace rk
