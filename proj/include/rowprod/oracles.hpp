#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "rowprod/embedding.hpp"
#include "rowprod/graph.hpp"
#include "rowprod/logic_engine.hpp"
#include "rowprod/partition.hpp"
#include "rowprod/product.hpp"

namespace rowprod::oracles {

/// Deliberately unoptimized reference implementations. They share no search
/// machinery with the main solver (plain id-order recursion, no degree
/// filtering, no symmetry breaking) so that agreement between the two is
/// meaningful.

struct EmbedReport {
    bool answer = false;
    std::optional<Embedding> witness;
    std::int64_t nodes_visited = 0;
};

inline constexpr int kNaiveGuestCap = 7;
inline constexpr int kNaiveProductCap = 60;

/// Plain recursive enumeration of injective maps in guest id order, checking
/// adjacency of already-placed neighbors and nothing else.
inline EmbedReport naive_embed(const Graph& g, const HostSpec& spec) {
    if (g.n > kNaiveGuestCap)
        throw std::invalid_argument("naive_embed: guest exceeds cap of 7 vertices");
    ProductGraph pg = build_product(spec);
    if (pg.base.n > kNaiveProductCap)
        throw std::invalid_argument("naive_embed: product exceeds cap of 60 vertices");
    EmbedReport rep;
    std::vector<int> image(g.n, -1);
    std::vector<char> used(pg.base.n, 0);
    std::function<bool(int)> go = [&](int v) -> bool {
        if (v == g.n) return true;
        ++rep.nodes_visited;
        for (int cell = 0; cell < pg.base.n; ++cell) {
            if (used[cell]) continue;
            bool ok = true;
            for (int w : g.adj[v])
                if (image[w] != -1 && !pg.base.has_edge(cell, image[w])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            image[v] = cell;
            used[cell] = 1;
            if (go(v + 1)) return true;
            image[v] = -1;
            used[cell] = 0;
        }
        return false;
    };
    rep.answer = go(0);
    if (rep.answer) {
        Embedding e;
        e.guest = g;
        e.host = spec;
        e.map.resize(g.n);
        for (int v = 0; v < g.n; ++v) e.map[v] = {pg.h_of(image[v]), pg.row_of(image[v])};
        rep.witness = std::move(e);
    }
    return rep;
}

struct AssignmentReport {
    bool answer = false;
    std::optional<std::vector<bool>> witness;
    std::int64_t nodes_visited = 0;
};

inline constexpr int kNaeVarCap = 24;

/// Exhaustive sweep over all 2^n assignments, checking the not-all-equal
/// condition clause by clause (no shared code with engine_feasible).
inline AssignmentReport nae_satisfiable(const NaeInstance& inst) {
    validate_instance(inst);
    if (inst.n > kNaeVarCap)
        throw std::invalid_argument("nae_satisfiable: variable count exceeds cap of 24");
    AssignmentReport rep;
    for (std::uint32_t mask = 0; mask < (1u << inst.n); ++mask) {
        ++rep.nodes_visited;
        bool ok = true;
        for (const auto& cl : inst.clauses) {
            int trues = 0;
            for (int lit : cl) {
                bool bit = (mask >> (std::abs(lit) - 1)) & 1;
                if (lit > 0 ? bit : !bit) ++trues;
            }
            if (trues == 0 || trues == static_cast<int>(cl.size())) {
                ok = false;
                break;
            }
        }
        if (ok) {
            rep.answer = true;
            std::vector<bool> a(inst.n);
            for (int i = 0; i < inst.n; ++i) a[i] = (mask >> i) & 1;
            rep.witness = std::move(a);
            return rep;
        }
    }
    return rep;
}

struct PartitionReport {
    bool answer = false;
    std::optional<std::vector<std::array<int, 3>>> witness;
    std::int64_t nodes_visited = 0;
};

inline constexpr int kPartitionCap = 4;

/// Exhaustive triple enumeration: always pair the smallest unused index with
/// every later pair and recurse. Each partition is generated once.
inline PartitionReport three_partition(const PartitionInstance& inst) {
    if (inst.n > kPartitionCap)
        throw std::invalid_argument("three_partition: n exceeds cap of 4");
    PartitionReport rep;
    const int m = 3 * inst.n;
    std::vector<char> used(m, 0);
    std::vector<std::array<int, 3>> picked;
    std::function<bool()> go = [&]() -> bool {
        int first = 0;
        while (first < m && used[first]) ++first;
        if (first == m) return true;
        ++rep.nodes_visited;
        used[first] = 1;
        for (int j = first + 1; j < m; ++j) {
            if (used[j]) continue;
            used[j] = 1;
            for (int k = j + 1; k < m; ++k) {
                if (used[k] || inst.a[first] + inst.a[j] + inst.a[k] != inst.B) continue;
                used[k] = 1;
                picked.push_back({first, j, k});
                if (go()) return true;
                picked.pop_back();
                used[k] = 0;
            }
            used[j] = 0;
        }
        used[first] = 0;
        return false;
    };
    rep.answer = go();
    if (rep.answer) rep.witness = picked;
    return rep;
}

}  // namespace rowprod::oracles
