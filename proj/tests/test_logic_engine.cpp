#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rowprod/logic_engine.hpp"
#include "rowprod/oracles.hpp"
#include "rowprod/recognize.hpp"

using namespace rowprod;

namespace {

NaeInstance fig_instance() {
    // three variables, clauses (-1,-2,-3) and (-1,2,-3), plus the spacer
    NaeInstance inst;
    inst.n = 3;
    inst.clauses = {{-1, -2, -3}, {-1, 2, -3}};
    return ensure_spacer(inst);
}

NaeInstance spacer_only() {
    NaeInstance inst;
    inst.n = 1;
    return ensure_spacer(inst);
}

int max_degree(const Graph& g) {
    int best = 0;
    for (int v = 0; v < g.n; ++v) best = std::max(best, g.degree(v));
    return best;
}

}  // namespace

TEST_CASE("ensure_spacer") {
    NaeInstance inst;
    inst.n = 2;
    inst.clauses = {{1, 2, -1}};
    auto norm = ensure_spacer(inst);
    CHECK(norm.clauses.size() == 2);
    CHECK(norm.normalized);
    CHECK(ensure_spacer(norm).clauses.size() == 2);
    CHECK(spacer_only().clauses.size() == 1);
}

TEST_CASE("engine_feasible semantics") {
    auto inst = fig_instance();
    CHECK(engine_feasible(inst, {true, false, false}));
    CHECK_FALSE(engine_feasible(inst, {false, false, false}));
    NaeInstance all_same;
    all_same.n = 1;
    all_same.clauses = {{1, 1, 1}};
    all_same = ensure_spacer(all_same);
    CHECK_FALSE(engine_feasible(all_same, {true}));
    CHECK_FALSE(engine_feasible(all_same, {false}));
}

TEST_CASE("gadget dimensions") {
    SECTION("three variables, three clauses after normalization") {
        auto g = build_g0(fig_instance());
        CHECK(g.H == 10);
        int middle = 0;
        for (const auto& vi : g.info)
            if (vi.role == LogicEngineGadget::VertexInfo::Role::Middle) ++middle;
        CHECK(middle == g.H + 1);
    }
    SECTION("single-variable spacer instance, frozen counts") {
        auto g = build_g0(spacer_only());
        CHECK(g.H == 4);
        CHECK(g.graph.n == 25);
        CHECK(g.graph.edge_count() == 28);
        // armature of x_1: one horizontal edge per end, two vertical edges
        int arm_h = 0, arm_v = 0;
        for (auto [u, v] : g.graph.edges) {
            bool arm = g.info[u].role == LogicEngineGadget::VertexInfo::Role::Armature ||
                       g.info[v].role == LogicEngineGadget::VertexInfo::Role::Armature;
            if (!arm) continue;
            (g.labels.of(u, v) == Orientation::Horizontal ? arm_h : arm_v)++;
        }
        CHECK(arm_h == 4);  // 2 paths x (1 + 1) ends
        CHECK(arm_v == 4);  // 2 paths x 2
    }
    SECTION("unnormalized input is rejected") {
        NaeInstance raw;
        raw.n = 2;
        raw.clauses = {{1, 2, -1}};
        CHECK_THROWS_AS(build_g0(raw), std::invalid_argument);
    }
}

TEST_CASE("flag counts per clause row") {
    auto g = build_g0(fig_instance());
    int n = 3;
    std::map<int, int> flags;
    for (const auto& vi : g.info)
        if (vi.role == LogicEngineGadget::VertexInfo::Role::Flag) ++flags[vi.clause];
    CHECK(flags[0] == 2 * n - 3);
    CHECK(flags[1] == 2 * n - 3);
    CHECK(flags[2] == 2 * n - 2);  // the two-literal spacer
}

TEST_CASE("G0 is bipartite and series-parallel") {
    for (const auto& inst : {fig_instance(), spacer_only()}) {
        auto g = build_g0(inst);
        CHECK(is_bipartite(g.graph));
        CHECK(is_series_parallel(g.graph));
    }
}

TEST_CASE("witness embedding and assignment extraction") {
    auto inst = fig_instance();
    auto g = build_g0(inst);
    std::vector<bool> a = {true, false, false};
    Embedding e = witness_embedding(g, a);
    CHECK(verify_embedding(e, &g.labels).valid());
    CHECK(extract_assignment(g, e) == a);

    SECTION("horizontal mirror complements the assignment") {
        Embedding m = e;
        for (auto& c : m.map) c.row = 4 * inst.n - c.row;
        CHECK(verify_embedding(m, &g.labels).valid());
        auto comp = extract_assignment(g, m);
        for (int i = 0; i < inst.n; ++i) CHECK(comp[i] == !a[i]);
        CHECK(engine_feasible(inst, comp));
    }
    SECTION("infeasible assignment is rejected") {
        CHECK_THROWS_AS(witness_embedding(g, {true, true, true}), std::invalid_argument);
    }
    SECTION("spacer-only instance") {
        auto g1 = build_g0(spacer_only());
        Embedding w = witness_embedding(g1, {true});
        CHECK(verify_embedding(w, &g1.labels).valid());
    }
}

TEST_CASE("spacer row holds 4n+1 original vertices") {
    for (const auto& inst : {fig_instance(), spacer_only()}) {
        auto g = build_g0(inst);
        int spacer_j = -1;
        for (std::size_t j = 0; j < inst.clauses.size(); ++j)
            if (is_spacer(inst.clauses[j], inst.n)) spacer_j = static_cast<int>(j);
        REQUIRE(spacer_j >= 0);
        int y = inst.n + 1 + spacer_j;
        int count = 0;
        for (const auto& vi : g.info)
            if (vi.y == y) ++count;
        CHECK(count == 4 * inst.n + 1);
    }
}

TEST_CASE("pipeline structure") {
    auto g = build_g0(spacer_only());
    auto p = build_pipeline(g, ProductKind::Strong);

    SECTION("G1 counts: two subdivisions per horizontal edge, 2-k leaves") {
        int horiz = static_cast<int>(p.horizontal_g0.size());
        CHECK(horiz == 12);
        CHECK(p.g1.n == 75);  // 25 + 2*12 + (2*25 - 2*12), frozen
        for (int v = 0; v < g.graph.n; ++v) {
            int k = 0;
            for (int w : p.g1.adj[v])
                if (p.horizontal_g1.end() !=
                    std::find(p.horizontal_g1.begin(), p.horizontal_g1.end(), make_edge(v, w)))
                    ++k;
            CHECK(k == 2);  // every original vertex ends with 2 horizontal edges
        }
    }
    SECTION("arrow-heads: 2 edges per decorated vertical edge, none on armatures") {
        CHECK(p.g2.edge_count() - p.g1.edge_count() ==
              2 * static_cast<int>(p.arrow_base.size()));
        for (auto [lower, upper] : p.arrow_base) {
            CHECK_FALSE(g.armature_member(lower));
            CHECK(g.info[lower].y + 1 == g.info[upper].y);
        }
    }
    SECTION("K_{2,5} accounting: +5 vertices and +10 edges per horizontal edge") {
        int h1 = static_cast<int>(p.horizontal_g1.size());
        CHECK(p.g.n - p.g2.n == 5 * h1);
        CHECK(p.g.edge_count() - p.g2.edge_count() == 10 * h1);
    }
    SECTION("final graph is series-parallel with max degree at most 16") {
        CHECK(is_series_parallel(p.g));
        CHECK(max_degree(p.g) <= 16);
    }
    SECTION("cartesian variant has no arrow-heads and 6-vertex bridges") {
        auto pc = build_pipeline(g, ProductKind::Cartesian);
        CHECK(pc.arrow_base.empty());
        CHECK(pc.g2.edges == pc.g1.edges);
        int h1 = static_cast<int>(pc.horizontal_g1.size());
        CHECK(pc.g.n - pc.g2.n == 6 * h1);
        CHECK(pc.g.edge_count() - pc.g2.edge_count() == 9 * h1);
        CHECK(is_series_parallel(pc.g));
    }
}

TEST_CASE("pipeline witnesses verify") {
    for (const auto& inst : {spacer_only(), fig_instance()}) {
        auto g = build_g0(inst);
        auto sat = oracles::nae_satisfiable(inst);
        REQUIRE(sat.answer);
        for (auto variant : {ProductKind::Strong, ProductKind::Cartesian}) {
            auto p = build_pipeline(g, variant);
            Embedding e = pipeline_witness(p, g, *sat.witness);
            CHECK(verify_embedding(e).valid());
        }
    }
}

TEST_CASE("the Fig instance hits the degree-16 bound") {
    auto p = build_pipeline(build_g0(fig_instance()), ProductKind::Strong);
    CHECK(max_degree(p.g) == 16);
}

TEST_CASE("random instances: oracle agrees with engine feasibility") {
    std::mt19937 rng(20240820);
    for (int trial = 0; trial < 100; ++trial) {
        NaeInstance inst;
        inst.n = 1 + static_cast<int>(rng() % 3);
        int m = 1 + static_cast<int>(rng() % 3);
        for (int j = 0; j < m; ++j) {
            std::vector<int> cl;
            for (int l = 0; l < 3; ++l) {
                int v = 1 + static_cast<int>(rng() % inst.n);
                cl.push_back(rng() % 2 ? v : -v);
            }
            inst.clauses.push_back(cl);
        }
        inst = ensure_spacer(inst);

        auto oracle = oracles::nae_satisfiable(inst);
        bool any = false;
        std::vector<bool> good;
        for (std::uint32_t mask = 0; mask < (1u << inst.n) && !any; ++mask) {
            std::vector<bool> a(inst.n);
            for (int i = 0; i < inst.n; ++i) a[i] = (mask >> i) & 1;
            if (engine_feasible(inst, a)) {
                any = true;
                good = a;
            }
        }
        REQUIRE(oracle.answer == any);

        auto g = build_g0(inst);
        CHECK(is_bipartite(g.graph));
        CHECK(is_series_parallel(g.graph));
        if (!any) continue;
        Embedding e = witness_embedding(g, good);
        CHECK(verify_embedding(e, &g.labels).valid());
        CHECK(engine_feasible(inst, extract_assignment(g, e)));
        for (auto variant : {ProductKind::Strong, ProductKind::Cartesian}) {
            auto p = build_pipeline(g, variant);
            CHECK(max_degree(p.g) <= 16);
            CHECK(verify_embedding(pipeline_witness(p, g, good)).valid());
        }
    }
}

TEST_CASE("edges with five common neighbours are horizontal in C x P") {
    // exhaustive over a small caterpillar product
    auto pg = build_product(HostSpec::caterpillar(4, 5, ProductKind::Strong, 5));
    for (auto [u, v] : pg.base.edges) {
        std::vector<int> common;
        std::set_intersection(pg.base.adj[u].begin(), pg.base.adj[u].end(),
                              pg.base.adj[v].begin(), pg.base.adj[v].end(),
                              std::back_inserter(common));
        if (common.size() >= 5) CHECK(pg.h_of(u) == pg.h_of(v));
    }
}
