#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

#include "rowprod/embedding.hpp"
#include "rowprod/graph.hpp"
#include "rowprod/product.hpp"
#include "rowprod/trees.hpp"

namespace rowprod {

enum class Outcome { Yes, No, Inconclusive };

struct SearchConfig {
    std::int64_t node_budget = 50'000'000;
    int ordering_seed = 0;  // reserved for future randomized restarts
    bool symmetry_breaking = true;
    std::optional<OrientationConstraint> constraint;
};

struct SearchResult {
    Outcome outcome = Outcome::No;
    std::optional<Embedding> witness;
    std::int64_t nodes = 0;
    std::string message;
};

namespace detail {

struct EmbedSearch {
    const Graph& guest;
    const ProductGraph& pg;
    const HostSpec& spec;
    const SearchConfig& cfg;
    std::vector<int> order;         // guest vertices, search order
    std::vector<int> image;         // guest vertex -> product id or -1
    std::vector<char> used;         // product id occupied
    std::vector<int> prod_degree;
    std::int64_t nodes = 0;
    bool budget_hit = false;

    EmbedSearch(const Graph& g, const ProductGraph& p, const HostSpec& s, const SearchConfig& c)
        : guest(g), pg(p), spec(s), cfg(c) {
        order.resize(g.n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
            return a < b;
        });
        image.assign(g.n, -1);
        used.assign(pg.base.n, 0);
        prod_degree.resize(pg.base.n);
        for (int v = 0; v < pg.base.n; ++v) prod_degree[v] = pg.base.degree(v);
    }

    // Orbit representatives of the product's vertex set under host/row
    // symmetries; only the first guest vertex is restricted to these.
    bool first_vertex_allowed(int cell) const {
        int h = pg.h_of(cell), r = pg.row_of(cell);
        if (r > (pg.rows - 1) / 2) return false;
        switch (spec.kind) {
            case HostSpec::Kind::Path:
                if (h > (spec.size - 1) / 2) return false;
                if (spec.size == pg.rows && h > r) return false;  // transpose symmetry
                return true;
            case HostSpec::Kind::Caterpillar: {
                int s = spec.size;
                if (h < s) return h <= (s - 1) / 2;
                int leg = (h - s) % spec.legs;
                int spine = (h - s) / spec.legs;
                return leg == 0 && spine <= (s - 1) / 2;
            }
            case HostSpec::Kind::Star:
                return h <= 1;  // center or one representative leaf
            default:
                return true;
        }
    }

    bool placement_ok(int v, int cell) const {
        if (used[cell]) return false;
        if (guest.degree(v) > prod_degree[cell]) return false;
        for (int w : guest.adj[v]) {
            int img = image[w];
            if (img == -1) continue;
            if (!pg.base.has_edge(cell, img)) return false;
            if (cfg.constraint) {
                Orientation o = cfg.constraint->of(v, w);
                if (o == Orientation::Horizontal && pg.h_of(cell) != pg.h_of(img)) return false;
                if (o == Orientation::Vertical && pg.row_of(cell) != pg.row_of(img)) return false;
            }
        }
        return true;
    }

    bool search(std::size_t depth) {
        if (depth == order.size()) return true;
        if (++nodes > cfg.node_budget) {
            budget_hit = true;
            return false;
        }
        int v = order[depth];
        // candidates: product neighbors of the first placed guest neighbor,
        // else the whole product, in ascending cell id
        const std::vector<int>* candidates = nullptr;
        std::vector<int> all;
        for (int w : guest.adj[v]) {
            if (image[w] != -1) {
                candidates = &pg.base.adj[image[w]];
                break;
            }
        }
        if (!candidates) {
            all.resize(pg.base.n);
            std::iota(all.begin(), all.end(), 0);
            candidates = &all;
        }
        for (int cell : *candidates) {
            if (depth == 0 && cfg.symmetry_breaking && !first_vertex_allowed(cell)) continue;
            if (!placement_ok(v, cell)) continue;
            image[v] = cell;
            used[cell] = 1;
            if (search(depth + 1)) return true;
            image[v] = -1;
            used[cell] = 0;
            if (budget_hit) return false;
        }
        return false;
    }
};

}  // namespace detail

/// Exact subgraph-embedding decision into the finite product named by `spec`.
/// Deterministic: guest vertices in descending-degree order (lexicographic
/// tie-break), candidate cells in ascending product id. Budget exhaustion
/// yields Inconclusive, never No.
inline SearchResult embed_into(const Graph& g, const HostSpec& spec,
                               const SearchConfig& cfg = {}) {
    if (cfg.node_budget <= 0) throw std::invalid_argument("embed_into: node budget must be > 0");
    ProductGraph pg = build_product(spec);
    SearchResult res;
    if (g.n > pg.base.n) {
        res.outcome = Outcome::No;
        res.message = "guest larger than product";
        return res;
    }
    detail::EmbedSearch s(g, pg, spec, cfg);
    bool found = s.search(0);
    res.nodes = s.nodes;
    if (found) {
        res.outcome = Outcome::Yes;
        Embedding e;
        e.guest = g;
        e.host = spec;
        e.map.resize(g.n);
        for (int v = 0; v < g.n; ++v) e.map[v] = {pg.h_of(s.image[v]), pg.row_of(s.image[v])};
        res.witness = std::move(e);
    } else if (s.budget_hit) {
        res.outcome = Outcome::Inconclusive;
        res.message = "node budget exhausted";
    } else {
        res.outcome = Outcome::No;
    }
    return res;
}

enum class RowParam { Pathwidth, Treedepth, SimplePathwidth };

namespace detail {

/// Canonical truncated host for a connected component of size n: projections
/// of a connected guest onto each factor are connected, so a window of size n
/// per factor suffices.
inline HostSpec canonical_host(RowParam param, int n) {
    switch (param) {
        case RowParam::Pathwidth: return HostSpec::caterpillar(n, n, ProductKind::Strong, n);
        case RowParam::Treedepth: return HostSpec::star(n, ProductKind::Strong, n);
        default: return HostSpec::path(n, ProductKind::Strong, n);
    }
}

struct ComponentWitness {
    std::vector<int> verts;  // original ids, sorted (induced subgraph order)
    Embedding emb;
};

/// Stacks per-component embeddings into one witness: shared host sized to the
/// largest component, components in consecutive row ranges. Components never
/// interact because the guest has no edges between them.
inline Embedding assemble_components(const Graph& g, RowParam param,
                                     const std::vector<ComponentWitness>& parts) {
    int max_n = 0, total_rows = 0;
    for (const auto& p : parts) {
        max_n = std::max(max_n, static_cast<int>(p.verts.size()));
        total_rows += p.emb.host.rows;
    }
    HostSpec host = canonical_host(param, max_n);
    host.rows = total_rows;
    Embedding out;
    out.guest = g;
    out.host = host;
    out.map.resize(g.n);
    int offset = 0;
    for (const auto& p : parts) {
        int n_k = static_cast<int>(p.verts.size());
        for (int i = 0; i < n_k; ++i) {
            Cell c = p.emb.map[i];
            int h = c.h;
            if (param == RowParam::Pathwidth && h >= n_k) {
                int spine = (h - n_k) / n_k, leg = (h - n_k) % n_k;
                h = max_n + spine * max_n + leg;  // remap leg ids into wider host
            }
            out.map[p.verts[i]] = {h, c.row + offset};
        }
        offset += p.emb.host.rows;
    }
    return out;
}

}  // namespace detail

/// Decides "row <param> = 1" per connected component against the truncated
/// canonical host (caterpillar / star / path respectively).
inline SearchResult row_param_one(const Graph& g, RowParam param, const SearchConfig& cfg = {}) {
    SearchResult res;
    if (g.n == 0) {
        res.outcome = Outcome::Yes;
        res.witness = Embedding{g, detail::canonical_host(param, 1), {}};
        return res;
    }
    std::vector<detail::ComponentWitness> parts;
    bool inconclusive = false;
    for (const auto& comp : components(g)) {
        Graph sub = induced_subgraph(g, comp);
        int n = sub.n;
        SearchResult r = embed_into(sub, detail::canonical_host(param, n), cfg);
        res.nodes += r.nodes;
        if (r.outcome == Outcome::No) {
            res.outcome = Outcome::No;
            return res;
        }
        if (r.outcome == Outcome::Inconclusive) {
            inconclusive = true;
            res.message = r.message;
            continue;
        }
        parts.push_back({comp, std::move(*r.witness)});
    }
    if (inconclusive) {
        res.outcome = Outcome::Inconclusive;
        return res;
    }
    res.outcome = Outcome::Yes;
    res.witness = detail::assemble_components(g, param, parts);
    return res;
}

/// King's-graph embeddability (row simple pathwidth 1).
inline SearchResult king_embeddable(const Graph& g, const SearchConfig& cfg = {}) {
    return row_param_one(g, RowParam::SimplePathwidth, cfg);
}

struct RowTreewidthResult {
    Outcome outcome = Outcome::No;
    std::optional<Graph> host_tree;
    std::optional<Embedding> witness;
    std::int64_t nodes = 0;
    std::string message;
};

/// Decides row treewidth 1 by enumerating all free trees up to the component
/// size (capped) and searching each T x P_n. A connected component projects
/// onto a connected subtree of the host, so trees of at most n vertices and n
/// rows are exhaustive.
inline RowTreewidthResult row_treewidth_one(const Graph& g, int tree_cap = 9,
                                            const SearchConfig& cfg = {}) {
    RowTreewidthResult res;
    if (g.n == 0) {
        res.outcome = Outcome::Yes;
        res.host_tree = make_graph(1, {});
        res.witness = Embedding{g, HostSpec::explicit_tree(*res.host_tree, ProductKind::Strong, 1), {}};
        return res;
    }
    struct Part {
        std::vector<int> verts;
        Graph tree;
        Embedding emb;
    };
    std::vector<Part> parts;
    for (const auto& comp : components(g)) {
        Graph sub = induced_subgraph(g, comp);
        int n = sub.n;
        if (n > tree_cap) {
            res.outcome = Outcome::Inconclusive;
            res.message = "component of size " + std::to_string(n) +
                          " exceeds tree enumeration cap " + std::to_string(tree_cap);
            return res;
        }
        bool found = false;
        bool inconclusive = false;
        for (int size = 1; size <= n && !found; ++size) {
            for (const Graph& tree : enumerate_free_trees(size)) {
                SearchResult r =
                    embed_into(sub, HostSpec::explicit_tree(tree, ProductKind::Strong, n), cfg);
                res.nodes += r.nodes;
                if (r.outcome == Outcome::Yes) {
                    parts.push_back({comp, tree, std::move(*r.witness)});
                    found = true;
                    break;
                }
                if (r.outcome == Outcome::Inconclusive) inconclusive = true;
            }
        }
        if (!found) {
            res.outcome = inconclusive ? Outcome::Inconclusive : Outcome::No;
            if (inconclusive) res.message = "node budget exhausted";
            return res;
        }
    }
    // Join the per-component host trees into one tree; extra host edges never
    // invalidate a subgraph embedding.
    std::vector<Edge> tree_edges;
    int tree_n = 0, total_rows = 0;
    std::vector<int> tree_offset;
    for (const auto& p : parts) {
        tree_offset.push_back(tree_n);
        for (auto [u, v] : p.tree.edges) tree_edges.push_back({u + tree_n, v + tree_n});
        if (tree_n > 0) tree_edges.push_back(make_edge(tree_n - 1, tree_n));
        tree_n += p.tree.n;
        total_rows += p.emb.host.rows;
    }
    Graph host_tree = make_graph(tree_n, std::move(tree_edges));
    Embedding out;
    out.guest = g;
    out.host = HostSpec::explicit_tree(host_tree, ProductKind::Strong, total_rows);
    out.map.resize(g.n);
    int row_offset = 0;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        const auto& p = parts[k];
        for (std::size_t i = 0; i < p.verts.size(); ++i)
            out.map[p.verts[i]] = {p.emb.map[i].h + tree_offset[k], p.emb.map[i].row + row_offset};
        row_offset += p.emb.host.rows;
    }
    res.outcome = Outcome::Yes;
    res.host_tree = host_tree;
    res.witness = std::move(out);
    return res;
}

}  // namespace rowprod
