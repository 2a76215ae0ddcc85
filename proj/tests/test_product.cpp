#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rowprod/product.hpp"

using namespace rowprod;

TEST_CASE("2x2 strong product is K_4") {
    auto pg = build_product(HostSpec::path(2, ProductKind::Strong, 2));
    CHECK(pg.base.n == 4);
    CHECK(pg.base.edge_count() == 6);
}

TEST_CASE("3x3 strong product: 9 vertices, 20 edges with orientation split") {
    auto pg = build_product(HostSpec::path(3, ProductKind::Strong, 3));
    CHECK(pg.base.n == 9);
    CHECK(pg.base.edge_count() == 20);
    int hor = 0, ver = 0, diag = 0;
    for (auto [u, v] : pg.base.edges) {
        switch (pg.classify(u, v)) {
            case EdgeKind::Horizontal: ++hor; break;
            case EdgeKind::Vertical: ++ver; break;
            case EdgeKind::Diagonal: ++diag; break;
        }
    }
    CHECK(hor == 6);
    CHECK(ver == 6);
    CHECK(diag == 8);
}

TEST_CASE("3x3 Cartesian product is the grid") {
    auto pg = build_product(HostSpec::path(3, ProductKind::Cartesian, 3));
    CHECK(pg.base.n == 9);
    CHECK(pg.base.edge_count() == 12);
}

TEST_CASE("product_edge_count closed form") {
    CHECK(product_edge_count(3, 2, 3, ProductKind::Strong) == 20);
    CHECK(product_edge_count(1, 0, 5, ProductKind::Strong) == 4);
    CHECK(product_edge_count(3, 2, 3, ProductKind::Cartesian) == 12);
}

TEST_CASE("size cap is enforced with an explicit limit message") {
    CHECK_THROWS_WITH(build_product(HostSpec::path(100, ProductKind::Strong, 100), 500),
                      Catch::Matchers::ContainsSubstring("cap"));
}

TEST_CASE("build_product edge counts match the closed form on random hosts") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        HostSpec spec;
        spec.product = (rng() % 2) ? ProductKind::Strong : ProductKind::Cartesian;
        spec.rows = 1 + static_cast<int>(rng() % 8);
        switch (rng() % 4) {
            case 0: spec = HostSpec::path(1 + rng() % 8, spec.product, spec.rows); break;
            case 1:
                spec = HostSpec::caterpillar(1 + rng() % 3, rng() % 3, spec.product, spec.rows);
                break;
            case 2: spec = HostSpec::star(1 + rng() % 7, spec.product, spec.rows); break;
            default: {
                int n = 2 + static_cast<int>(rng() % 7);
                // random connected host graph: random tree plus extra edges
                std::vector<Edge> es;
                for (int v = 1; v < n; ++v) es.push_back(make_edge(static_cast<int>(rng() % v), v));
                for (int extra = 0; extra < 3; ++extra) {
                    int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
                    if (u != v) es.push_back(make_edge(u, v));
                }
                std::sort(es.begin(), es.end());
                es.erase(std::unique(es.begin(), es.end()), es.end());
                spec = HostSpec::explicit_graph(make_graph(n, es), spec.product, spec.rows);
            }
        }
        auto pg = build_product(spec);
        CHECK(pg.base.edge_count() ==
              product_edge_count(pg.host.n, pg.host.edge_count(), pg.rows, spec.product));
    }
}

TEST_CASE("king and grid corner/edge/interior degrees") {
    auto king = build_product(HostSpec::path(5, ProductKind::Strong, 5));
    CHECK(king.base.degree(king.id(0, 0)) == 3);
    CHECK(king.base.degree(king.id(0, 2)) == 5);
    CHECK(king.base.degree(king.id(2, 2)) == 8);
    auto grid = build_product(HostSpec::path(5, ProductKind::Cartesian, 5));
    CHECK(grid.base.degree(grid.id(0, 0)) == 2);
    CHECK(grid.base.degree(grid.id(0, 2)) == 3);
    CHECK(grid.base.degree(grid.id(2, 2)) == 4);
}

TEST_CASE("explicit tree host must be a tree") {
    CHECK_THROWS_AS(
        build_product(HostSpec::explicit_tree(cycle_graph(3), ProductKind::Strong, 2)),
        std::invalid_argument);
}
