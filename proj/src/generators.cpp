#include "ramseykit/generators.hpp"

#include <algorithm>
#include <cctype>

namespace rk {

namespace {

void need(bool ok, const std::string& msg) {
    if (!ok) throw bad_parameter(msg);
}

Graph complete(int n) {
    need(n >= 0, "K_n needs n >= 0");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, e);
}

Graph edgeless(int n) {
    need(n >= 0, "E_n needs n >= 0");
    return Graph(n);
}

Graph path(int n) {
    need(n >= 1, "P_n needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph(n, e);
}

Graph cycle(int n) {
    need(n >= 3, "C_n needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    e.emplace_back(n - 1, 0);
    return Graph(n, e);
}

Graph complete_bipartite(int s, int t) {
    need(s >= 1 && t >= 1, "K_{s,t} needs s,t >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < s; ++u)
        for (int v = 0; v < t; ++v) e.emplace_back(u, s + v);
    return Graph(s + t, e);
}

// star center 0, middles 1..n, pendant n+i hangs off middle i
Graph star_with_pendants(int n) {
    need(n >= 1, "K_{1,n}* needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= n; ++i) {
        e.emplace_back(0, i);
        e.emplace_back(i, n + i);
    }
    return Graph(2 * n + 1, e);
}

// clique 0..n-1, pendant n+i hangs off clique vertex i
Graph clique_with_pendants(int n) {
    need(n >= 1, "K_n* needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
        e.emplace_back(u, n + u);
    }
    return Graph(2 * n, e);
}

// cliques 0..n-1 and n..2n-1, matching i -- n+i
Graph matched_cliques(int n) {
    need(n >= 1, "CK_n needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            e.emplace_back(u, v);
            e.emplace_back(n + u, n + v);
        }
        e.emplace_back(u, n + u);
    }
    return Graph(2 * n, e);
}

// clique 0..n-1, stable n..2n-1 complete to the clique, apex 2n adjacent
// to the stable side only
Graph clique_join_stable_apex(int n) {
    need(n >= 1, "T_n needs n >= 1");
    Graph base = join_graphs(complete(n), edgeless(n));
    std::vector<std::pair<int, int>> e = base.edges();
    for (int i = 0; i < n; ++i) e.emplace_back(n + i, 2 * n);
    return Graph(2 * n + 1, e);
}

// clique 0..n-1; pendant n + i*n + j (j in [0,n)) hangs off clique vertex i
Graph clique_with_pendant_bundles(int n) {
    need(n >= 1, "K_n^n needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
        for (int j = 0; j < n; ++j) e.emplace_back(u, n + u * n + j);
    }
    return Graph(n + n * n, e);
}

} // namespace

Graph named_graph(const GraphName& name) {
    int a = name.a, b = name.b;
    switch (name.kind) {
        case GraphKind::K: return complete(a);
        case GraphKind::E: return edgeless(a);
        case GraphKind::P: return path(a);
        case GraphKind::C: return cycle(a);
        case GraphKind::K_st: return complete_bipartite(a, b);
        case GraphKind::K1n_star: return star_with_pendants(a);
        case GraphKind::Kn_star: return clique_with_pendants(a);
        case GraphKind::CK: return matched_cliques(a);
        case GraphKind::T: return clique_join_stable_apex(a);
        case GraphKind::Kn_n: return clique_with_pendant_bundles(a);
        case GraphKind::K2_plus_nK1:
            need(a >= 1, "K_2+nK_1 needs n >= 1");
            return join_graphs(complete(2), edgeless(a));
        case GraphKind::K1_plus_nK2:
            need(a >= 1, "K_1+nK_2 needs n >= 1");
            return join_graphs(complete(1), disjoint_copies(complete(2), a));
        case GraphKind::K1_plus_nP3:
            need(a >= 1, "K_1+nP_3 needs n >= 1");
            return join_graphs(complete(1), disjoint_copies(path(3), a));
        case GraphKind::E2_plus_K:
            need(a >= 1, "E_2+K_n needs n >= 1");
            return join_graphs(edgeless(2), complete(a));
        case GraphKind::K_plus_E:
            need(a >= 1, "K_n+E_n needs n >= 1");
            return join_graphs(complete(a), edgeless(a));
        case GraphKind::nP3:
            need(a >= 1, "nP_3 needs n >= 1");
            return disjoint_copies(path(3), a);
        case GraphKind::nK3:
            need(a >= 1, "nK_3 needs n >= 1");
            return disjoint_copies(complete(3), a);
        case GraphKind::nK1n:
            need(a >= 1 && b >= 1, "nK_{1,m} needs n,m >= 1");
            return disjoint_copies(complete_bipartite(1, b), a);
    }
    throw bad_parameter("unknown graph kind");
}

std::string format_name(const GraphName& name) {
    auto s = [](int x) { return std::to_string(x); };
    switch (name.kind) {
        case GraphKind::K: return "K" + s(name.a);
        case GraphKind::E: return "E" + s(name.a);
        case GraphKind::P: return "P" + s(name.a);
        case GraphKind::C: return "C" + s(name.a);
        case GraphKind::K_st: return "K" + s(name.a) + "," + s(name.b);
        case GraphKind::K1n_star: return "K1," + s(name.a) + "*";
        case GraphKind::Kn_star: return "K" + s(name.a) + "*";
        case GraphKind::CK: return "CK" + s(name.a);
        case GraphKind::T: return "T" + s(name.a);
        case GraphKind::Kn_n: return "K" + s(name.a) + "^" + s(name.a);
        case GraphKind::K2_plus_nK1: return "K2+" + s(name.a) + "K1";
        case GraphKind::K1_plus_nK2: return "K1+" + s(name.a) + "K2";
        case GraphKind::K1_plus_nP3: return "K1+" + s(name.a) + "P3";
        case GraphKind::E2_plus_K: return "E2+K" + s(name.a);
        case GraphKind::K_plus_E: return "K" + s(name.a) + "+E" + s(name.a);
        case GraphKind::nP3: return s(name.a) + "P3";
        case GraphKind::nK3: return s(name.a) + "K3";
        case GraphKind::nK1n: return s(name.a) + "K1," + s(name.b);
    }
    return "?";
}

namespace {

bool parse_int(const std::string& s, std::size_t& i, int& out) {
    if (i >= s.size() || !std::isdigit((unsigned char)s[i])) return false;
    long v = 0;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) {
        v = v * 10 + (s[i] - '0');
        if (v > 1000000) return false;
        ++i;
    }
    out = (int)v;
    return true;
}

bool consume(const std::string& s, std::size_t& i, const char* lit) {
    std::size_t j = i;
    for (const char* p = lit; *p; ++p, ++j)
        if (j >= s.size() || s[j] != *p) return false;
    i = j;
    return true;
}

} // namespace

std::optional<GraphName> parse_name(const std::string& text) {
    std::size_t i = 0;
    auto done = [&](GraphName n) -> std::optional<GraphName> {
        if (i != text.size()) return std::nullopt;
        return n;
    };

    // leading multiplier: nP3, nK3, nK1,m
    if (i < text.size() && std::isdigit((unsigned char)text[i])) {
        int k;
        if (!parse_int(text, i, k)) return std::nullopt;
        if (consume(text, i, "P3")) return done({GraphKind::nP3, k, 0});
        if (consume(text, i, "K1,")) {
            int m;
            if (!parse_int(text, i, m)) return std::nullopt;
            return done({GraphKind::nK1n, k, m});
        }
        if (consume(text, i, "K3")) return done({GraphKind::nK3, k, 0});
        return std::nullopt;
    }

    if (consume(text, i, "CK")) {
        int n;
        if (!parse_int(text, i, n)) return std::nullopt;
        return done({GraphKind::CK, n, 0});
    }
    if (consume(text, i, "T")) {
        int n;
        if (!parse_int(text, i, n)) return std::nullopt;
        return done({GraphKind::T, n, 0});
    }
    if (consume(text, i, "P")) {
        int n;
        if (!parse_int(text, i, n)) return std::nullopt;
        return done({GraphKind::P, n, 0});
    }
    if (consume(text, i, "C")) {
        int n;
        if (!parse_int(text, i, n)) return std::nullopt;
        return done({GraphKind::C, n, 0});
    }
    if (consume(text, i, "E")) {
        int n;
        if (!parse_int(text, i, n)) return std::nullopt;
        if (n == 2 && consume(text, i, "+K")) {
            int m;
            if (!parse_int(text, i, m)) return std::nullopt;
            return done({GraphKind::E2_plus_K, m, 0});
        }
        return done({GraphKind::E, n, 0});
    }
    if (consume(text, i, "K")) {
        int n;
        if (!parse_int(text, i, n)) return std::nullopt;
        if (consume(text, i, "*")) return done({GraphKind::Kn_star, n, 0});
        if (consume(text, i, "^")) {
            int m;
            if (!parse_int(text, i, m) || m != n) return std::nullopt;
            return done({GraphKind::Kn_n, n, 0});
        }
        if (consume(text, i, ",")) {
            int m;
            if (!parse_int(text, i, m)) return std::nullopt;
            if (n == 1 && consume(text, i, "*"))
                return done({GraphKind::K1n_star, m, 0});
            return done({GraphKind::K_st, n, m});
        }
        if (consume(text, i, "+")) {
            if (n == 2) {
                int m;
                if (!parse_int(text, i, m)) return std::nullopt;
                if (!consume(text, i, "K1")) return std::nullopt;
                return done({GraphKind::K2_plus_nK1, m, 0});
            }
            if (n == 1) {
                int m;
                if (!parse_int(text, i, m)) return std::nullopt;
                if (consume(text, i, "K2"))
                    return done({GraphKind::K1_plus_nK2, m, 0});
                if (consume(text, i, "P3"))
                    return done({GraphKind::K1_plus_nP3, m, 0});
                return std::nullopt;
            }
            if (consume(text, i, "E")) {
                int m;
                if (!parse_int(text, i, m) || m != n) return std::nullopt;
                return done({GraphKind::K_plus_E, n, 0});
            }
            return std::nullopt;
        }
        return done({GraphKind::K, n, 0});
    }
    return std::nullopt;
}

const std::vector<std::string>& family_ids() {
    static const std::vector<std::string> ids = {
        "deg", "alpha", "c", "adh",
        "h-deg", "h-alpha", "h-c", "h-adh",
        "cor-deg", "cor-alpha", "cor-c", "cor-adh",
    };
    return ids;
}

std::vector<GraphName> family_names(const std::string& family_id, int n) {
    if (n < 1) throw bad_parameter("family parameter must be >= 1");
    using GK = GraphKind;
    auto g = [n](GK k) { return GraphName{k, n, 0}; };
    if (family_id == "deg")
        return {g(GK::K), g(GK::P), g(GK::K1n_star), {GK::K_st, 2, n},
                g(GK::K2_plus_nK1), g(GK::K1_plus_nK2)};
    if (family_id == "alpha")
        return {g(GK::Kn_star), g(GK::P), g(GK::K1n_star), {GK::K_st, 2, n},
                g(GK::E2_plus_K), g(GK::K1_plus_nP3), g(GK::CK)};
    if (family_id == "c")
        return {g(GK::Kn_star), g(GK::P), g(GK::K1n_star), {GK::K_st, 2, n},
                g(GK::CK), g(GK::T)};
    if (family_id == "adh")
        return {g(GK::Kn_star), g(GK::P), g(GK::K1n_star)};
    if (family_id == "h-deg")
        return {g(GK::K), {GK::K_st, n, n}, {GK::nK1n, n, n}};
    if (family_id == "h-alpha" || family_id == "h-c")
        return {{GK::K_st, n, n}, {GK::nK1n, n, n}, g(GK::K_plus_E), g(GK::Kn_n)};
    if (family_id == "h-adh")
        return {{GK::nK1n, n, n}, g(GK::Kn_n)};
    if (family_id == "cor-deg")
        return {g(GK::K), g(GK::nP3), g(GK::nK3), g(GK::K1n_star),
                {GK::K_st, 2, n}, g(GK::K2_plus_nK1), g(GK::K1_plus_nK2)};
    if (family_id == "cor-alpha")
        return {g(GK::Kn_star), g(GK::nP3), g(GK::K1n_star), {GK::K_st, 2, n},
                g(GK::E2_plus_K), g(GK::CK)};
    if (family_id == "cor-c")
        return {g(GK::Kn_star), g(GK::nP3), g(GK::K1n_star), {GK::K_st, 2, n},
                g(GK::CK), g(GK::T)};
    if (family_id == "cor-adh")
        return {g(GK::Kn_star), g(GK::nP3), g(GK::K1n_star)};
    throw unknown_family("unknown family id: " + family_id);
}

std::vector<FamilyMember> make_family(const std::string& family_id, int n) {
    std::vector<FamilyMember> out;
    for (const GraphName& name : family_names(family_id, n))
        out.push_back({name, named_graph(name)});
    return out;
}

} // namespace rk
