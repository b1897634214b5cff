#include <doctest.h>

#include <set>

#include "ramseykit/errors.hpp"
#include "ramseykit/generators.hpp"
#include "ramseykit/params.hpp"

using namespace rk;

TEST_CASE("named graph orders and sizes") {
    struct Row {
        GraphName name;
        int order;
        long size;
    };
    const Row rows[] = {
        {{GraphKind::K, 5, 0}, 5, 10},
        {{GraphKind::E, 4, 0}, 4, 0},
        {{GraphKind::P, 6, 0}, 6, 5},
        {{GraphKind::C, 6, 0}, 6, 6},
        {{GraphKind::K_st, 2, 4}, 6, 8},
        {{GraphKind::K1n_star, 3, 0}, 7, 6},
        {{GraphKind::Kn_star, 3, 0}, 6, 6},
        {{GraphKind::CK, 3, 0}, 6, 9},
        {{GraphKind::T, 3, 0}, 7, 15},
        {{GraphKind::Kn_n, 3, 0}, 12, 12},
        {{GraphKind::K2_plus_nK1, 3, 0}, 5, 7},
        {{GraphKind::K1_plus_nK2, 3, 0}, 7, 9},
        {{GraphKind::K1_plus_nP3, 3, 0}, 10, 15},
        {{GraphKind::E2_plus_K, 3, 0}, 5, 9},
        {{GraphKind::K_plus_E, 3, 0}, 6, 12},
        {{GraphKind::nP3, 3, 0}, 9, 6},
        {{GraphKind::nK3, 3, 0}, 9, 9},
        {{GraphKind::nK1n, 3, 3}, 12, 9},
    };
    for (const Row& r : rows) {
        Graph g = named_graph(r.name);
        CAPTURE(format_name(r.name));
        CHECK(g.order() == r.order);
        CHECK(g.size() == r.size);
    }
}

TEST_CASE("documented vertex layouts") {
    // two cliques with a perfect matching between them
    Graph ck = named_graph({GraphKind::CK, 3, 0});
    for (int i = 0; i < 3; ++i) {
        CHECK(ck.has_edge(i, 3 + i));
        for (int j = 0; j < 3; ++j)
            if (i != j) CHECK_FALSE(ck.has_edge(i, 3 + j));
    }

    // spider: centre 0, middle i at 1..n, pendant of middle i at n+i
    Graph sp = named_graph({GraphKind::K1n_star, 3, 0});
    for (int i = 1; i <= 3; ++i) {
        CHECK(sp.has_edge(0, i));
        CHECK(sp.has_edge(i, 3 + i));
        CHECK_FALSE(sp.has_edge(0, 3 + i));
    }

    // clique with private pendants
    Graph ks = named_graph({GraphKind::Kn_star, 3, 0});
    for (int i = 0; i < 3; ++i) CHECK(ks.has_edge(i, 3 + i));
    CHECK(ks.degree(3) == 1);

    // clique joined to a stable set, apex over the stable side only
    Graph t = named_graph({GraphKind::T, 3, 0});
    for (int s = 3; s < 6; ++s) {
        CHECK(t.has_edge(6, s));
        for (int c = 0; c < 3; ++c) CHECK(t.has_edge(c, s));
        for (int s2 = s + 1; s2 < 6; ++s2) CHECK_FALSE(t.has_edge(s, s2));
    }
    CHECK(t.degree(6) == 3);

    // clique with pendant bundles: pendant j of clique vertex i
    Graph knn = named_graph({GraphKind::Kn_n, 2, 0});
    CHECK(knn.order() == 6);
    CHECK(knn.has_edge(0, 2));
    CHECK(knn.has_edge(0, 3));
    CHECK(knn.has_edge(1, 4));
    CHECK(knn.has_edge(1, 5));
    CHECK_FALSE(knn.has_edge(0, 4));
    CHECK_FALSE(knn.has_edge(2, 3));

    // apex joined to n disjoint edges
    Graph kk = named_graph({GraphKind::K1_plus_nK2, 2, 0});
    CHECK(kk.degree(0) == 4);
    CHECK(kk.has_edge(1, 2));
    CHECK(kk.has_edge(3, 4));
    CHECK_FALSE(kk.has_edge(2, 3));

    // apex joined to n disjoint paths
    Graph kp = named_graph({GraphKind::K1_plus_nP3, 2, 0});
    CHECK(kp.degree(0) == 6);
    CHECK(kp.has_edge(1, 2));
    CHECK(kp.has_edge(2, 3));
    CHECK_FALSE(kp.has_edge(1, 3));

    // disjoint stars: block i at offset i(b+1), centre first
    Graph stars = named_graph({GraphKind::nK1n, 2, 3});
    CHECK(stars.order() == 8);
    CHECK(stars.degree(0) == 3);
    CHECK(stars.degree(4) == 3);
    CHECK(stars.has_edge(0, 1));
    CHECK(stars.has_edge(4, 7));
    CHECK_FALSE(stars.has_edge(0, 4));
}

TEST_CASE("name syntax round trips") {
    const char* texts[] = {"K5",     "E4",    "P7",    "C6",     "K2,4",
                           "K1,4*",  "K4*",   "CK3",   "T3",     "K3^3",
                           "K2+4K1", "K1+4K2", "K1+4P3", "E2+K5", "K3+E3",
                           "3P3",    "3K3",   "3K1,3"};
    for (const char* t : texts) {
        auto name = parse_name(t);
        REQUIRE_MESSAGE(name.has_value(), t);
        CHECK(format_name(*name) == t);
        CHECK(named_graph(*name).order() > 0);
    }
    CHECK_FALSE(parse_name("Q7").has_value());
    CHECK_FALSE(parse_name("K").has_value());
    CHECK_FALSE(parse_name("").has_value());
    CHECK_FALSE(parse_name("K5 ").has_value());
    // the syntax admits K0: the order-zero graph
    REQUIRE(parse_name("K0").has_value());
    CHECK(named_graph(*parse_name("K0")).order() == 0);
    // constructions that need structure reject zero
    CHECK_THROWS_AS(named_graph({GraphKind::K_st, 0, 3}), bad_parameter);
}

TEST_CASE("family ids and catalogue orders") {
    const std::vector<std::string> expect = {
        "deg",   "alpha",   "c",     "adh",    "h-deg",     "h-alpha",
        "h-c",   "h-adh",   "cor-deg", "cor-alpha", "cor-c", "cor-adh"};
    CHECK(family_ids() == expect);

    auto names = [](const std::string& id, int n) {
        std::vector<std::string> out;
        for (const GraphName& g : family_names(id, n))
            out.push_back(format_name(g));
        return out;
    };
    CHECK(names("deg", 4) ==
          std::vector<std::string>{"K4", "P4", "K1,4*", "K2,4", "K2+4K1",
                                   "K1+4K2"});
    CHECK(names("alpha", 4) ==
          std::vector<std::string>{"K4*", "P4", "K1,4*", "K2,4", "E2+K4",
                                   "K1+4P3", "CK4"});
    CHECK(names("c", 4) ==
          std::vector<std::string>{"K4*", "P4", "K1,4*", "K2,4", "CK4",
                                   "T4"});
    CHECK(names("adh", 4) ==
          std::vector<std::string>{"K4*", "P4", "K1,4*"});
    CHECK(names("h-deg", 4) ==
          std::vector<std::string>{"K4", "K4,4", "4K1,4"});
    CHECK(names("h-alpha", 4) ==
          std::vector<std::string>{"K4,4", "4K1,4", "K4+E4", "K4^4"});
    CHECK(names("h-c", 4) == names("h-alpha", 4));
    CHECK(names("h-adh", 4) == std::vector<std::string>{"4K1,4", "K4^4"});
    CHECK(names("cor-deg", 4) ==
          std::vector<std::string>{"K4", "4P3", "4K3", "K1,4*", "K2,4",
                                   "K2+4K1", "K1+4K2"});
    CHECK(names("cor-alpha", 4) ==
          std::vector<std::string>{"K4*", "4P3", "K1,4*", "K2,4", "E2+K4",
                                   "CK4"});
    CHECK(names("cor-c", 4) ==
          std::vector<std::string>{"K4*", "4P3", "K1,4*", "K2,4", "CK4",
                                   "T4"});
    CHECK(names("cor-adh", 4) ==
          std::vector<std::string>{"K4*", "4P3", "K1,4*"});
    CHECK_THROWS_AS(family_names("bogus", 3), unknown_family);
    CHECK_THROWS_AS(family_names("deg", 0), bad_parameter);
}

TEST_CASE("make_family graphs match their names") {
    for (const std::string& id : family_ids())
        for (int n : {2, 4}) {
            auto fam = make_family(id, n);
            CHECK(fam.size() == family_names(id, n).size());
            for (const FamilyMember& m : fam) {
                Graph direct = named_graph(m.name);
                CHECK(m.graph.order() == direct.order());
                CHECK(m.graph.edges() == direct.edges());
            }
        }
}

TEST_CASE("count tables at one sample parameter") {
    // threshold-2 counts per catalogue member at n = 4
    auto counts = [](const std::string& id, Param kind) {
        std::vector<long> out;
        for (const FamilyMember& m : make_family(id, 4))
            out.push_back(nontrivial_count(m.graph, kind, 2));
        return out;
    };
    CHECK(counts("deg", Param::degree) ==
          std::vector<long>{4, 2, 5, 6, 6, 9});
    CHECK(counts("alpha", Param::alpha) ==
          std::vector<long>{4, 2, 5, 6, 4, 5, 8});
    CHECK(counts("c", Param::c) == std::vector<long>{4, 2, 5, 6, 8, 5});
    CHECK(counts("adh", Param::adh) == std::vector<long>{4, 2, 5});

    // the deleted-edge slip: the c-reading of K_n+E_n counts nothing
    Graph ke = named_graph({GraphKind::K_plus_E, 4, 0});
    CHECK(nontrivial_count(ke, Param::c, 2) == 0);
    CHECK(nontrivial_count(ke, Param::alpha, 2) == 4);
}

TEST_CASE("member connectivity") {
    // the connected statements' members are connected; the packing
    // members are not
    for (const char* id : {"deg", "alpha", "c", "adh"})
        for (const FamilyMember& m : make_family(id, 3))
            CHECK(is_connected(m.graph));
    CHECK_FALSE(is_connected(named_graph({GraphKind::nP3, 2, 0})));
    CHECK_FALSE(is_connected(named_graph({GraphKind::nK1n, 2, 2})));
}
