#include <catch2/catch_amalgamated.hpp>

#include "rowprod/oracles.hpp"
#include "rowprod/solver.hpp"
#include "test_helpers.hpp"

using namespace rowprod;

TEST_CASE("K_4 embeds into the 2x2 king block") {
    auto r = embed_into(complete_graph(4), HostSpec::path(2, ProductKind::Strong, 2));
    REQUIRE(r.outcome == Outcome::Yes);
    CHECK(verify_embedding(*r.witness).valid());
}

TEST_CASE("K_5 does not embed into any king's graph window") {
    auto r = embed_into(complete_graph(5), HostSpec::path(5, ProductKind::Strong, 5));
    CHECK(r.outcome == Outcome::No);
}

TEST_CASE("C_4 is the 2x2 grid") {
    auto r = embed_into(cycle_graph(4), HostSpec::path(2, ProductKind::Cartesian, 2));
    REQUIRE(r.outcome == Outcome::Yes);
    CHECK(verify_embedding(*r.witness).valid());
}

TEST_CASE("budget exhaustion reports inconclusive, not no") {
    SearchConfig cfg;
    cfg.node_budget = 2;
    auto r = embed_into(path_graph(6), HostSpec::path(6, ProductKind::Strong, 6), cfg);
    CHECK(r.outcome == Outcome::Inconclusive);
    CHECK_THAT(r.message, Catch::Matchers::ContainsSubstring("budget"));
}

TEST_CASE("orientation constraints are honored during search") {
    Graph p2 = path_graph(2);
    SearchConfig cfg;
    OrientationConstraint c;
    c.labels[{0, 1}] = Orientation::Horizontal;
    cfg.constraint = c;
    auto r = embed_into(p2, HostSpec::path(3, ProductKind::Cartesian, 3), cfg);
    REQUIRE(r.outcome == Outcome::Yes);
    CHECK(r.witness->map[0].h == r.witness->map[1].h);
    CHECK(verify_embedding(*r.witness, &*cfg.constraint).valid());

    // a single host vertex and one row: no horizontal edge possible
    auto r2 = embed_into(p2, HostSpec::path(5, ProductKind::Cartesian, 1), cfg);
    CHECK(r2.outcome == Outcome::No);
}

TEST_CASE("king_embeddable on stars: K_{1,8} yes, K_{1,9} no") {
    auto yes = king_embeddable(star_graph(8));
    REQUIRE(yes.outcome == Outcome::Yes);
    CHECK(verify_embedding(*yes.witness).valid());
    CHECK(king_embeddable(star_graph(9)).outcome == Outcome::No);
    CHECK(king_embeddable(path_graph(7)).outcome == Outcome::Yes);
}

TEST_CASE("row_param_one canonical hosts") {
    CHECK(row_param_one(path_graph(5), RowParam::Pathwidth).outcome == Outcome::Yes);
    auto td = row_param_one(star_graph(9), RowParam::Treedepth);
    REQUIRE(td.outcome == Outcome::Yes);
    CHECK(verify_embedding(*td.witness).valid());
    // K_4 with a pendant at each vertex, simple pathwidth: regression fixture
    Graph k4p = make_graph(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                               {0, 4}, {1, 5}, {2, 6}, {3, 7}});
    auto sp = row_param_one(k4p, RowParam::SimplePathwidth);
    REQUIRE(sp.outcome == Outcome::Yes);  // frozen from exhaustive search
    CHECK(verify_embedding(*sp.witness).valid());
}

TEST_CASE("disconnected guests are decided per component") {
    Graph two_paths = make_graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    auto r = king_embeddable(two_paths);
    REQUIRE(r.outcome == Outcome::Yes);
    CHECK(verify_embedding(*r.witness).valid());
    // one good and one impossible component
    std::vector<Edge> es;
    for (int i = 1; i <= 9; ++i) es.push_back({0, i});
    es.push_back({10, 11});
    CHECK(king_embeddable(make_graph(12, es)).outcome == Outcome::No);
}

TEST_CASE("row_treewidth_one") {
    SECTION("trees are trivially yes") {
        for (const Graph& t : enumerate_free_trees(6)) {
            auto r = row_treewidth_one(t);
            REQUIRE(r.outcome == Outcome::Yes);
            CHECK(verify_embedding(*r.witness).valid());
        }
    }
    SECTION("triangle fits over the 2-vertex tree") {
        auto r = row_treewidth_one(cycle_graph(3));
        REQUIRE(r.outcome == Outcome::Yes);
        CHECK(verify_embedding(*r.witness).valid());
    }
    SECTION("K_5 is no at cap 5") {
        CHECK(row_treewidth_one(complete_graph(5), 5).outcome == Outcome::No);
    }
    SECTION("component above cap is inconclusive with message") {
        auto r = row_treewidth_one(complete_graph(5), 4);
        CHECK(r.outcome == Outcome::Inconclusive);
        CHECK_THAT(r.message, Catch::Matchers::ContainsSubstring("cap"));
    }
}

TEST_CASE("solver agrees with the naive oracle on small guests") {
    std::vector<HostSpec> menu = {
        HostSpec::path(4, ProductKind::Strong, 4),
        HostSpec::path(4, ProductKind::Cartesian, 4),
        HostSpec::caterpillar(2, 2, ProductKind::Strong, 5),
        HostSpec::star(5, ProductKind::Strong, 6),
    };
    for (int n = 2; n <= 5; ++n) {
        for (const Graph& g : testing::connected_graphs_up_to_iso(n)) {
            for (const HostSpec& spec : menu) {
                auto fast = embed_into(g, spec);
                auto slow = oracles::naive_embed(g, spec);
                REQUIRE(fast.outcome != Outcome::Inconclusive);
                CHECK((fast.outcome == Outcome::Yes) == slow.answer);
                if (fast.outcome == Outcome::Yes)
                    CHECK(verify_embedding(*fast.witness).valid());
                if (slow.answer) CHECK(verify_embedding(*slow.witness).valid());
            }
        }
    }
}

TEST_CASE("monotonicity in the row count") {
    for (const Graph& g : {cycle_graph(5), star_graph(4), complete_graph(4)}) {
        for (int rows = 2; rows <= 4; ++rows) {
            auto a = embed_into(g, HostSpec::path(4, ProductKind::Strong, rows));
            auto b = embed_into(g, HostSpec::path(4, ProductKind::Strong, rows + 1));
            if (a.outcome == Outcome::Yes) CHECK(b.outcome == Outcome::Yes);
        }
    }
}

TEST_CASE("determinism: identical inputs give identical witnesses") {
    auto a = embed_into(cycle_graph(6), HostSpec::path(4, ProductKind::Strong, 4));
    auto b = embed_into(cycle_graph(6), HostSpec::path(4, ProductKind::Strong, 4));
    REQUIRE(a.outcome == Outcome::Yes);
    CHECK(a.witness->map == b.witness->map);
}
