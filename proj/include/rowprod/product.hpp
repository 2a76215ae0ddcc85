#pragma once

#include <cstdint>
#include <string>

#include "rowprod/graph.hpp"
#include "rowprod/recognize.hpp"

namespace rowprod {

enum class ProductKind { Strong, Cartesian };

/// Symbolic host description: the H factor of H x P, a product kind, and a
/// finite row count truncating the ray P.
struct HostSpec {
    enum class Kind { Path, Caterpillar, Star, ExplicitTree, Explicit };

    Kind kind = Kind::Path;
    int size = 1;       // Path: vertices; Caterpillar: spine length; Star: leaves
    int legs = 0;       // Caterpillar only: legs per spine vertex
    Graph graph;        // ExplicitTree / Explicit only
    ProductKind product = ProductKind::Strong;
    int rows = 1;

    static HostSpec path(int k, ProductKind p, int rows) {
        HostSpec s;
        s.kind = Kind::Path;
        s.size = k;
        s.product = p;
        s.rows = rows;
        return s;
    }
    static HostSpec caterpillar(int spine, int legs, ProductKind p, int rows) {
        HostSpec s;
        s.kind = Kind::Caterpillar;
        s.size = spine;
        s.legs = legs;
        s.product = p;
        s.rows = rows;
        return s;
    }
    static HostSpec star(int leaves, ProductKind p, int rows) {
        HostSpec s;
        s.kind = Kind::Star;
        s.size = leaves;
        s.product = p;
        s.rows = rows;
        return s;
    }
    static HostSpec explicit_tree(Graph t, ProductKind p, int rows) {
        HostSpec s;
        s.kind = Kind::ExplicitTree;
        s.graph = std::move(t);
        s.product = p;
        s.rows = rows;
        return s;
    }
    static HostSpec explicit_graph(Graph g, ProductKind p, int rows) {
        HostSpec s;
        s.kind = Kind::Explicit;
        s.graph = std::move(g);
        s.product = p;
        s.rows = rows;
        return s;
    }
};

inline void validate(const HostSpec& spec) {
    if (spec.rows < 1) throw std::invalid_argument("HostSpec: rows must be >= 1");
    switch (spec.kind) {
        case HostSpec::Kind::Path:
            if (spec.size < 1) throw std::invalid_argument("HostSpec: path size must be >= 1");
            break;
        case HostSpec::Kind::Caterpillar:
            if (spec.size < 1 || spec.legs < 0)
                throw std::invalid_argument("HostSpec: bad caterpillar parameters");
            break;
        case HostSpec::Kind::Star:
            if (spec.size < 1) throw std::invalid_argument("HostSpec: star needs >= 1 leaf");
            break;
        case HostSpec::Kind::ExplicitTree:
            if (!is_tree(spec.graph))
                throw std::invalid_argument("HostSpec: explicit tree is not a tree");
            break;
        case HostSpec::Kind::Explicit:
            if (spec.graph.n < 1) throw std::invalid_argument("HostSpec: empty explicit graph");
            break;
    }
}

/// Materializes the H factor. Vertex numbering is deterministic:
/// paths 0..k-1 in order, caterpillars spine-first then legs, stars center 0.
inline Graph materialize_host(const HostSpec& spec) {
    validate(spec);
    switch (spec.kind) {
        case HostSpec::Kind::Path: return path_graph(spec.size);
        case HostSpec::Kind::Caterpillar: return caterpillar_graph(spec.size, spec.legs);
        case HostSpec::Kind::Star: return star_graph(spec.size);
        default: return spec.graph;
    }
}

enum class EdgeKind { Horizontal, Vertical, Diagonal };

/// Materialized finite product H x P_rows. Product vertex (h, r) has id
/// h * rows + r. Horizontal edges keep the H coordinate fixed, vertical
/// edges keep the row fixed, diagonal edges move both.
struct ProductGraph {
    Graph base;
    Graph host;
    ProductKind product = ProductKind::Strong;
    int host_size = 0;
    int rows = 0;

    int id(int h, int r) const { return h * rows + r; }
    int h_of(int v) const { return v / rows; }
    int row_of(int v) const { return v % rows; }

    EdgeKind classify(int u, int v) const {
        if (h_of(u) == h_of(v)) return EdgeKind::Horizontal;
        if (row_of(u) == row_of(v)) return EdgeKind::Vertical;
        return EdgeKind::Diagonal;
    }
};

inline constexpr std::int64_t kDefaultProductCap = 1 << 21;

inline ProductGraph build_product(const HostSpec& spec,
                                  std::int64_t size_cap = kDefaultProductCap) {
    validate(spec);
    Graph host = materialize_host(spec);
    const int rows = spec.rows;
    const std::int64_t total = static_cast<std::int64_t>(host.n) * rows;
    if (total > size_cap)
        throw std::invalid_argument("build_product: product size " + std::to_string(total) +
                                    " exceeds cap " + std::to_string(size_cap));
    ProductGraph pg;
    pg.host = host;
    pg.product = spec.product;
    pg.host_size = host.n;
    pg.rows = rows;
    std::vector<Edge> es;
    // horizontal: same host vertex, consecutive rows
    for (int h = 0; h < host.n; ++h)
        for (int r = 0; r + 1 < rows; ++r) es.push_back({pg.id(h, r), pg.id(h, r + 1)});
    // vertical: host edge, same row
    for (auto [a, b] : host.edges)
        for (int r = 0; r < rows; ++r) es.push_back(make_edge(pg.id(a, r), pg.id(b, r)));
    if (spec.product == ProductKind::Strong) {
        for (auto [a, b] : host.edges)
            for (int r = 0; r + 1 < rows; ++r) {
                es.push_back(make_edge(pg.id(a, r), pg.id(b, r + 1)));
                es.push_back(make_edge(pg.id(a, r + 1), pg.id(b, r)));
            }
    }
    pg.base = make_graph(static_cast<int>(total), std::move(es));
    return pg;
}

/// Closed-form edge count of H x P_rows, cross-check for build_product.
inline std::int64_t product_edge_count(std::int64_t host_vertices, std::int64_t host_edges,
                                       std::int64_t rows, ProductKind product) {
    if (host_vertices < 0 || host_edges < 0 || rows < 0)
        throw std::invalid_argument("product_edge_count: negative input");
    if (rows == 0) return 0;
    std::int64_t count = host_edges * rows + host_vertices * (rows - 1);
    if (product == ProductKind::Strong) count += 2 * host_edges * (rows - 1);
    return count;
}

}  // namespace rowprod
