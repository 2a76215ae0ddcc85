#include <catch2/catch_amalgamated.hpp>

#include "rowprod/embedding.hpp"
#include "rowprod/transforms.hpp"
#include "test_helpers.hpp"

using namespace rowprod;

TEST_CASE("K_4 identity-embedded into the 2x2 king block is valid") {
    Embedding e;
    e.guest = complete_graph(4);
    e.host = HostSpec::path(2, ProductKind::Strong, 2);
    e.map = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    CHECK(verify_embedding(e).valid());
}

TEST_CASE("non-injective map is reported") {
    Embedding e;
    e.guest = path_graph(3);
    e.host = HostSpec::path(2, ProductKind::Strong, 2);
    e.map = {{0, 0}, {1, 1}, {0, 0}};
    auto rep = verify_embedding(e);
    REQUIRE_FALSE(rep.valid());
    CHECK_THAT(rep.violations[0], Catch::Matchers::ContainsSubstring("non-injective"));
}

TEST_CASE("non-edge images and orientation mismatches are reported") {
    Embedding e;
    e.guest = path_graph(2);
    e.host = HostSpec::path(3, ProductKind::Cartesian, 3);
    e.map = {{0, 0}, {2, 2}};
    CHECK_FALSE(verify_embedding(e).valid());

    e.map = {{0, 0}, {1, 0}};  // a vertical product edge
    OrientationConstraint c;
    c.labels[{0, 1}] = Orientation::Horizontal;
    auto rep = verify_embedding(e, &c);
    REQUIRE_FALSE(rep.valid());
    CHECK_THAT(rep.violations[0], Catch::Matchers::ContainsSubstring("horizontal"));
    c.labels[{0, 1}] = Orientation::Vertical;
    CHECK(verify_embedding(e, &c).valid());
}

TEST_CASE("partial map is an error, not a violation") {
    Embedding e;
    e.guest = path_graph(3);
    e.host = HostSpec::path(3, ProductKind::Strong, 3);
    e.map = {{0, 0}, {1, 1}};
    CHECK_THROWS_AS(verify_embedding(e), std::invalid_argument);
}

TEST_CASE("layering checks") {
    Graph p3 = path_graph(3);
    CHECK(verify_layering(p3, Layering{{0, 1, 2}}));
    CHECK_FALSE(verify_layering(p3, Layering{{0, 2, 0}}));
    CHECK(verify_layering(star_graph(4), Layering{{0, 0, 0, 0, 0}}));
    CHECK(layer_span(p3, Layering{{0, 1, 2}}) == 3);
    CHECK(layer_span(p3, Layering{{5, 5, 5}}) == 1);
    CHECK_THROWS_AS(layer_span(p3, Layering{{0, 2, 0}}), std::invalid_argument);
}

namespace {

// exhaustive enumeration of valid layerings, recording the span
int max_layer_span(const Graph& g) {
    int best = 0;
    std::vector<int> assign(g.n, 0);
    std::function<void(int)> go = [&](int v) {
        if (v == g.n) {
            Layering l{assign};
            if (verify_layering(g, l)) best = std::max(best, layer_span(g, l));
            return;
        }
        for (int layer = 0; layer < g.n; ++layer) {
            assign[v] = layer;
            go(v + 1);
        }
    };
    go(0);
    return best;
}

}  // namespace

TEST_CASE("universal vertex forces layer span <= 3 (exhaustive, small)") {
    // C_4 plus a universal vertex, and a couple of other small graphs
    std::vector<Graph> bases = {cycle_graph(4), path_graph(4), complete_graph(3)};
    for (const Graph& base : bases) {
        Graph plus = universal_vertex(base).output;
        CHECK(max_layer_span(plus) <= 3);
    }
}
