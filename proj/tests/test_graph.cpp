#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "rowprod/graph.hpp"
#include "rowprod/recognize.hpp"
#include "rowprod/trees.hpp"
#include "test_helpers.hpp"

using namespace rowprod;

TEST_CASE("make_graph rejects malformed input") {
    CHECK_THROWS_AS(make_graph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("adjacency is symmetric and sorted") {
    Graph g = make_graph(4, {{2, 0}, {1, 3}, {0, 1}});
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(2, 0));
    CHECK_FALSE(g.has_edge(0, 3));
    CHECK(g.edges == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}});
}

TEST_CASE("recognize_caterpillar on paths and stars") {
    SECTION("P_5: spine is the internal vertices") {
        auto cat = recognize_caterpillar(path_graph(5));
        REQUIRE(cat);
        CHECK(cat->spine == std::vector<int>{1, 2, 3});
        CHECK(cat->legs.at(1) == std::vector<int>{0});
        CHECK(cat->legs.at(3) == std::vector<int>{4});
    }
    SECTION("K_{1,4}: one-vertex spine, four legs") {
        auto cat = recognize_caterpillar(star_graph(4));
        REQUIRE(cat);
        CHECK(cat->spine == std::vector<int>{0});
        CHECK(cat->legs.at(0).size() == 4);
    }
    SECTION("C_4 is not a caterpillar") {
        CHECK_FALSE(recognize_caterpillar(cycle_graph(4)));
    }
    SECTION("K_1 and K_2 accepted with one-vertex spine") {
        auto k1 = recognize_caterpillar(make_graph(1, {}));
        REQUIRE(k1);
        CHECK(k1->spine == std::vector<int>{0});
        auto k2 = recognize_caterpillar(path_graph(2));
        REQUIRE(k2);
        CHECK(k2->spine == std::vector<int>{0});
    }
    SECTION("spider on 7 vertices is a tree but not a caterpillar") {
        // three paths of length 2 from a hub
        Graph spider = make_graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
        CHECK_FALSE(recognize_caterpillar(spider));
    }
}

TEST_CASE("recognize_caterpillar agrees with the definition on all trees <= 9") {
    for (int n = 1; n <= 9; ++n) {
        for (const Graph& t : enumerate_free_trees(n)) {
            // definition check: non-leaf vertices form a path
            std::vector<int> nonleaf;
            for (int v = 0; v < n; ++v)
                if (t.degree(v) >= 2) nonleaf.push_back(v);
            bool expect;
            if (nonleaf.empty()) {
                expect = true;
            } else {
                Graph sub = induced_subgraph(t, nonleaf);
                int ends = 0, bad = 0;
                for (int v = 0; v < sub.n; ++v) {
                    if (sub.degree(v) > 2) ++bad;
                    if (sub.degree(v) <= 1) ++ends;
                }
                expect = bad == 0 && is_connected(sub) && (sub.n == 1 || ends == 2);
            }
            CHECK(recognize_caterpillar(t).has_value() == expect);
        }
    }
}

TEST_CASE("is_series_parallel basics") {
    CHECK_FALSE(is_series_parallel(complete_graph(4)));
    CHECK(is_series_parallel(path_graph(7)));
    CHECK(is_series_parallel(star_graph(5)));
    CHECK(is_series_parallel(cycle_graph(5)));
    // K_{2,5}
    std::vector<Edge> es;
    for (int i = 2; i < 7; ++i) {
        es.push_back({0, i});
        es.push_back({1, i});
    }
    CHECK(is_series_parallel(make_graph(7, es)));
    CHECK_THROWS_AS(is_series_parallel(make_graph(4, {{0, 1}, {2, 3}})), std::invalid_argument);
}

TEST_CASE("is_series_parallel equals treewidth <= 2 on connected graphs <= 6") {
    for (int n = 1; n <= 6; ++n) {
        for (const Graph& g : testing::connected_graphs_up_to_iso(n)) {
            CHECK(is_series_parallel(g) == testing::treewidth_at_most(g, 2));
        }
    }
}

TEST_CASE("is_bipartite") {
    CHECK(is_bipartite(cycle_graph(4)));
    CHECK_FALSE(is_bipartite(complete_graph(3)));
    CHECK(is_bipartite(make_graph(3, {})));
}

TEST_CASE("free tree enumeration counts") {
    const int expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47};
    for (int n = 1; n <= 9; ++n) {
        auto trees = enumerate_free_trees(n);
        CHECK(trees.size() == static_cast<std::size_t>(expected[n - 1]));
        for (const Graph& t : trees) CHECK(is_tree(t));
    }
}

TEST_CASE("free tree enumeration matches brute-force classification at n=6") {
    // all labeled trees on 6 vertices via connected graphs with 5 edges
    std::set<std::string> canons;
    for (const Graph& g : testing::connected_graphs_up_to_iso(6))
        if (g.edge_count() == 5) canons.insert(testing::min_perm_canon(g));
    std::set<std::string> enumerated;
    for (const Graph& t : enumerate_free_trees(6)) enumerated.insert(testing::min_perm_canon(t));
    CHECK(canons == enumerated);
}
