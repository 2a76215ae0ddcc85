#include <catch2/catch_amalgamated.hpp>

#include "rowprod/oracles.hpp"

using namespace rowprod;

TEST_CASE("naive embed basics") {
    auto yes = oracles::naive_embed(complete_graph(4), HostSpec::path(2, ProductKind::Strong, 2));
    REQUIRE(yes.answer);
    CHECK(verify_embedding(*yes.witness).valid());
    auto no = oracles::naive_embed(complete_graph(5), HostSpec::path(3, ProductKind::Strong, 3));
    CHECK_FALSE(no.answer);
}

TEST_CASE("naive embed caps") {
    CHECK_THROWS_AS(oracles::naive_embed(path_graph(8), HostSpec::path(4, ProductKind::Strong, 4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(oracles::naive_embed(path_graph(3), HostSpec::path(9, ProductKind::Strong, 9)),
                    std::invalid_argument);
}
