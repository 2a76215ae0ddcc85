#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rowprod/graph.hpp"
#include "rowprod/product.hpp"

namespace rowprod {

struct Cell {
    int h = 0;
    int row = 0;
    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Injective map from guest vertices into (host vertex, row) cells of the
/// product named by `host`. The central witness object of the library.
struct Embedding {
    Graph guest;
    HostSpec host;
    std::vector<Cell> map;  // indexed by guest vertex id
};

enum class Orientation { Horizontal, Vertical, Free };

struct OrientationConstraint {
    std::map<Edge, Orientation> labels;

    Orientation of(int u, int v) const {
        auto it = labels.find(make_edge(u, v));
        return it == labels.end() ? Orientation::Free : it->second;
    }
};

struct VerifyReport {
    std::vector<std::string> violations;
    bool truncated = false;  // violation list hit the cap

    bool valid() const { return violations.empty(); }
};

/// Checks an embedding witness against the materialized product: totality,
/// range, injectivity, every guest edge maps to a product edge, and (when
/// given) hor/ver orientation labels. Reports the first `max_violations`
/// offending items with coordinates.
inline VerifyReport verify_embedding(const Embedding& e,
                                     const OrientationConstraint* constraint = nullptr,
                                     std::size_t max_violations = 20) {
    if (e.map.size() != static_cast<std::size_t>(e.guest.n))
        throw std::invalid_argument("verify_embedding: map not total on guest vertices");
    ProductGraph pg = build_product(e.host);
    VerifyReport rep;
    auto add = [&](std::string msg) {
        if (rep.violations.size() < max_violations)
            rep.violations.push_back(std::move(msg));
        else
            rep.truncated = true;
    };
    auto cell_str = [](Cell c) {
        return "(" + std::to_string(c.h) + "," + std::to_string(c.row) + ")";
    };
    std::map<Cell, int> seen;
    for (int v = 0; v < e.guest.n; ++v) {
        Cell c = e.map[v];
        if (c.h < 0 || c.h >= pg.host_size || c.row < 0 || c.row >= pg.rows) {
            add("vertex " + std::to_string(v) + " maps outside product: " + cell_str(c));
            continue;
        }
        auto [it, fresh] = seen.emplace(c, v);
        if (!fresh)
            add("non-injective: vertices " + std::to_string(it->second) + " and " +
                std::to_string(v) + " both map to " + cell_str(c));
    }
    for (auto [u, v] : e.guest.edges) {
        Cell cu = e.map[u], cv = e.map[v];
        if (cu.h < 0 || cu.h >= pg.host_size || cv.h < 0 || cv.h >= pg.host_size ||
            cu.row < 0 || cu.row >= pg.rows || cv.row < 0 || cv.row >= pg.rows)
            continue;  // endpoint already reported
        int a = pg.id(cu.h, cu.row), b = pg.id(cv.h, cv.row);
        if (!pg.base.has_edge(a, b)) {
            add("edge (" + std::to_string(u) + "," + std::to_string(v) +
                ") maps to non-edge " + cell_str(cu) + "-" + cell_str(cv));
            continue;
        }
        if (constraint) {
            Orientation o = constraint->of(u, v);
            if (o == Orientation::Horizontal && cu.h != cv.h)
                add("edge (" + std::to_string(u) + "," + std::to_string(v) +
                    ") labeled horizontal but H-projections differ: " + cell_str(cu) + "-" +
                    cell_str(cv));
            if (o == Orientation::Vertical && cu.row != cv.row)
                add("edge (" + std::to_string(u) + "," + std::to_string(v) +
                    ") labeled vertical but row indices differ: " + cell_str(cu) + "-" +
                    cell_str(cv));
        }
    }
    return rep;
}

/// Layer assignment; valid when every edge spans at most one layer boundary.
/// Indices may be arbitrary integers; normalize() makes them 0-based
/// contiguous.
struct Layering {
    std::vector<int> layer_of;

    void normalize() {
        std::set<int> used(layer_of.begin(), layer_of.end());
        std::map<int, int> rank;
        int k = 0;
        for (int x : used) rank[x] = k++;
        for (int& x : layer_of) x = rank[x];
    }
};

inline bool verify_layering(const Graph& g, const Layering& l) {
    if (l.layer_of.size() != static_cast<std::size_t>(g.n))
        throw std::invalid_argument("verify_layering: layer assignment not total");
    for (auto [u, v] : g.edges) {
        int d = l.layer_of[u] - l.layer_of[v];
        if (d < -1 || d > 1) return false;
    }
    return true;
}

/// Number of distinct nonempty layers of a valid layering.
inline int layer_span(const Graph& g, const Layering& l) {
    if (!verify_layering(g, l)) throw std::invalid_argument("layer_span: invalid layering");
    std::set<int> used(l.layer_of.begin(), l.layer_of.end());
    return static_cast<int>(used.size());
}

}  // namespace rowprod
