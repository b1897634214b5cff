#include "ramseykit/harness.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>
#include <thread>

#include "ramseykit/engines.hpp"
#include "ramseykit/errors.hpp"
#include "ramseykit/params.hpp"
#include "ramseykit/subgraph.hpp"
#include "ramseykit/witness.hpp"

namespace rk {

std::vector<Graph> enumerate_graphs(int order, bool connected_only) {
    if (order < 1 || order > kEnumerateCap)
        throw bad_parameter("enumeration order must be in [1," +
                            std::to_string(kEnumerateCap) + "]");
    std::vector<Graph> cur{Graph(1)};
    for (int k = 2; k <= order; ++k) {
        std::map<std::string, Graph> next;
        for (const Graph& g : cur) {
            std::vector<std::pair<int, int>> base = g.edges();
            for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
                std::vector<std::pair<int, int>> edges = base;
                for (int v = 0; v < k - 1; ++v)
                    if (mask >> v & 1) edges.emplace_back(v, k - 1);
                Graph h(k, edges);
                Canonical canon = canonical_form(h, 64);
                next.emplace(to_graph6(canon.graph), std::move(canon.graph));
            }
        }
        cur.clear();
        for (auto& [key, g] : next) {
            (void)key;
            cur.push_back(std::move(g));
        }
    }
    if (connected_only) {
        std::vector<Graph> keep;
        for (Graph& g : cur)
            if (is_connected(g)) keep.push_back(std::move(g));
        cur = std::move(keep);
    }
    return cur;
}

const std::vector<std::string>& scan_check_names() {
    static const std::vector<std::string> names{"chain", "cut-adh",
                                                "dom-cut"};
    return names;
}

void scan_graph(const Graph& g, long index,
                const std::vector<std::string>& checks,
                std::vector<CheckViolation>& out) {
    auto wanted = [&](const std::string& c) {
        return std::find(checks.begin(), checks.end(), c) != checks.end();
    };
    std::string g6 = to_graph6(g);
    auto flag = [&](const std::string& check, const std::string& detail) {
        out.push_back({index, g6, check, detail});
    };
    if (wanted("chain")) {
        for (int v = 0; v < g.order(); ++v) {
            int deg = g.degree(v);
            int al = vertex_param(g, v, Param::alpha);
            int cc = vertex_param(g, v, Param::c);
            int ad = vertex_param(g, v, Param::adh);
            if (!(deg >= al && al >= cc && cc >= ad))
                flag("chain", "vertex " + std::to_string(v) + ": " +
                                  std::to_string(deg) + " >= " +
                                  std::to_string(al) + " >= " +
                                  std::to_string(cc) + " >= " +
                                  std::to_string(ad) + " fails");
        }
    }
    if (wanted("cut-adh")) {
        VertexSet cuts = cut_vertices(g);
        for (int v = 0; v < g.order(); ++v) {
            bool cut = cuts.test(v);
            int ad = adhesion(g, v);
            if (cut != (ad >= 2))
                flag("cut-adh", "vertex " + std::to_string(v) +
                                    (cut ? ": cut vertex with adhesion "
                                         : ": adhesion ") +
                                    std::to_string(ad) +
                                    (cut ? "" : " without being a cut "
                                                "vertex"));
        }
    }
    if (wanted("dom-cut") && g.order() >= 2 && is_connected(g)) {
        VertexSet cuts = cut_vertices(g);
        VertexSet dom = dominating_set(g, DomMode::connected);
        if (!cuts.is_subset_of(dom)) {
            VertexSet missing = cuts - dom;
            flag("dom-cut", "cut vertex " +
                                std::to_string(missing.first()) +
                                " outside the connected dominating set");
        }
    }
}

namespace {

ScanReport scan_indexed(const std::vector<Graph>& graphs,
                        const std::vector<std::string>& checks, int jobs) {
    for (const std::string& c : checks) {
        const auto& names = scan_check_names();
        if (std::find(names.begin(), names.end(), c) == names.end())
            throw bad_parameter("unknown check: " + c);
    }
    ScanReport rep;
    rep.checks = checks;
    rep.scanned = static_cast<long>(graphs.size());
    jobs = std::max(1, std::min<int>(jobs, 16));
    if (jobs == 1) {
        for (std::size_t i = 0; i < graphs.size(); ++i)
            scan_graph(graphs[i], static_cast<long>(i), checks,
                       rep.violations);
        return rep;
    }
    std::vector<std::vector<CheckViolation>> shard(jobs);
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&, t] {
            for (std::size_t i = t; i < graphs.size(); i += jobs)
                scan_graph(graphs[i], static_cast<long>(i), checks,
                           shard[t]);
        });
    for (auto& th : pool) th.join();
    for (auto& s : shard)
        rep.violations.insert(rep.violations.end(), s.begin(), s.end());
    std::stable_sort(rep.violations.begin(), rep.violations.end(),
                     [](const CheckViolation& a, const CheckViolation& b) {
                         return a.index < b.index;
                     });
    return rep;
}

} // namespace

ScanReport scan_graphs(const std::vector<Graph>& graphs,
                       const std::vector<std::string>& checks, int jobs) {
    return scan_indexed(graphs, checks, jobs);
}

ScanReport scan_corpus(std::istream& in, CorpusFormat format,
                       const std::vector<std::string>& checks, int jobs) {
    CorpusStream stream(in, format, /*strict=*/false);
    std::vector<Graph> graphs;
    while (auto g = stream.next()) graphs.push_back(std::move(*g));
    ScanReport rep = scan_indexed(graphs, checks, jobs);
    rep.diagnostics = stream.diagnostics();
    return rep;
}

ExtremalReport extremal_search(const std::string& theorem, int n,
                               int max_order, bool connected_only) {
    ExtremalReport rep;
    rep.theorem = theorem;
    rep.n = n;
    rep.connected = connected_only;
    std::vector<Graph> members;
    for (FamilyMember& m : make_family(theorem_family(theorem), n))
        members.push_back(std::move(m.graph));
    Param kind = theorem_param(theorem);
    bool use_h = theorem_is_hindex(theorem);
    for (int order = 1; order <= max_order; ++order) {
        ExtremalRow row;
        row.order = order;
        for (const Graph& g : enumerate_graphs(order, connected_only)) {
            FreenessReport fr = is_family_free(g, members);
            if (fr.verdict == Freeness::inconclusive)
                throw cap_exceeded("freeness undecided at order " +
                                   std::to_string(order));
            if (fr.verdict != Freeness::free) continue;
            ++row.free_hosts;
            long count = use_h ? h_index(g, kind)
                               : nontrivial_count(g, kind, n);
            if (count > row.best) {
                row.best = count;
                row.witness = to_graph6(g);
            }
        }
        rep.rows.push_back(row);
    }
    return rep;
}

SmallRamseyReport certify_small_ramsey() {
    SmallRamseyReport rep;

    // edges of K_6 in lexicographic order
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) edges.emplace_back(u, v);
    int eid[6][6];
    for (std::size_t e = 0; e < edges.size(); ++e)
        eid[edges[e].first][edges[e].second] =
            eid[edges[e].second][edges[e].first] = static_cast<int>(e);

    rep.all_forced = true;
    for (std::uint32_t mask = 0; mask < (1u << 15); ++mask) {
        ++rep.colorings;
        auto color = [&](int u, int v) {
            return static_cast<int>(mask >> eid[u][v] & 1);
        };
        std::optional<ColoredClique> tri = find_mono_clique(6, 2, color, 3);
        bool mono = false;
        if (tri && tri->vertices.size() == 3) {
            auto& t = tri->vertices;
            mono = color(t[0], t[1]) == tri->color &&
                   color(t[0], t[2]) == tri->color &&
                   color(t[1], t[2]) == tri->color;
        }
        if (!mono) {
            rep.all_forced = false;
            break;
        }
    }

    // the 5-cycle colouring: red = cycle edges, blue = the complement
    // (again a 5-cycle); a nullopt here is a complete-search certificate
    auto red = [](int u, int v) {
        int d = (v - u + 5) % 5;
        return (d == 1 || d == 4) ? 0 : 1;
    };
    rep.pentagon_free = !find_mono_clique(5, 2, red, 3).has_value();
    std::ostringstream os;
    for (int u = 0; u < 5; ++u)
        os << u << "-" << (u + 1) % 5 << (u == 4 ? "" : " ");
    rep.pentagon_edges = os.str();
    return rep;
}

} // namespace rk
