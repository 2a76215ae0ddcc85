#pragma once

#include <array>
#include <map>
#include <string>

#include "rowprod/embedding.hpp"
#include "rowprod/graph.hpp"
#include "rowprod/product.hpp"

namespace rowprod {

/// Output of a graph-to-graph transformation together with the vertex-level
/// correspondence needed to lift witnesses.
struct TransformArtifact {
    Graph output;
    // Transform-specific correspondence, keyed by original vertex:
    //  - tv_gadget_transform: {root, port0..port3} (ports are the T_2 centers,
    //    consumed in ascending edge order)
    //  - leaf_pad: the ids of the added leaves
    //  - universal_vertex: empty; the new vertex has id |V(input)|
    std::map<int, std::vector<int>> port_map;
    std::string provenance;
};

/// Replaces every vertex v by the 37-vertex tree T(v): a root with four
/// T_1 copies (subdivided K_{1,1}) and four T_2 copies (subdivided K_{1,4})
/// attached at their degree-2 vertices; each original edge uv becomes an
/// edge between an unused T_2 center of T(u) and one of T(v).
inline TransformArtifact tv_gadget_transform(const Graph& g) {
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) > 4)
            throw std::invalid_argument("tv_gadget_transform: vertex degree exceeds 4");
    TransformArtifact art;
    art.provenance = "tv_gadget";
    std::vector<Edge> es;
    auto root_of = [](int v) { return 37 * v; };
    // T_2 copy q of vertex v: s, c, l1, l2, l3, l4 starting at 37v + 13 + 6q
    auto t2_center = [&](int v, int q) { return 37 * v + 13 + 6 * q + 1; };
    for (int v = 0; v < g.n; ++v) {
        int root = root_of(v);
        art.output.vtag[root] = "root";
        std::vector<int>& ports = art.port_map[v];
        ports.push_back(root);
        for (int t = 0; t < 4; ++t) {
            int mid = 37 * v + 1 + 3 * t;
            es.push_back({root, mid});
            es.push_back({mid, mid + 1});
            es.push_back({mid, mid + 2});
        }
        for (int q = 0; q < 4; ++q) {
            int s = 37 * v + 13 + 6 * q;
            int c = s + 1, l1 = s + 2;
            es.push_back({root, s});
            es.push_back({s, c});
            es.push_back({s, l1});
            es.push_back({c, s + 3});
            es.push_back({c, s + 4});
            es.push_back({c, s + 5});
            ports.push_back(c);
            art.output.vtag[c] = "port";
        }
    }
    std::vector<int> next_port(g.n, 0);
    for (auto [u, v] : g.edges) {  // already in ascending lexicographic order
        int cu = t2_center(u, next_port[u]++);
        int cv = t2_center(v, next_port[v]++);
        es.push_back(make_edge(cu, cv));
    }
    auto vtag = std::move(art.output.vtag);
    art.output = make_graph(37 * g.n, std::move(es));
    art.output.vtag = std::move(vtag);
    return art;
}

namespace detail {

struct Offset {
    int dx, dy;
};

// Fixed in-block layout of T(v), relative to the root. The 5x5 block holds
// the distance-2 ball (25 cells exactly); the three outer leaves of each T_2
// spill just outside it in a pattern chosen so facing blocks never collide.
inline constexpr std::array<Offset, 4> kT1Mid = {{{0, 1}, {1, 0}, {0, -1}, {-1, 0}}};
inline constexpr std::array<std::array<Offset, 2>, 4> kT1Ends = {{
    {{{0, 2}, {1, 2}}},
    {{{2, -1}, {2, 0}}},
    {{{-1, -2}, {0, -2}}},
    {{{-2, 0}, {-2, 1}}},
}};
inline constexpr std::array<Offset, 4> kCornerSign = {{{1, 1}, {1, -1}, {-1, -1}, {-1, 1}}};

inline Offset t2_cell(int corner, int which) {
    auto [sx, sy] = kCornerSign[corner];
    switch (which) {
        case 0: return {sx, sy};            // s, attachment vertex
        case 1: return {2 * sx, 2 * sy};    // c, the degree-4 center
        case 2:                             // l1, the subdivided leaf
            return sx == sy ? Offset{2 * sx, sy} : Offset{sx, 2 * sy};
        case 3: return {3 * sx, sy};        // l2..l4 spill outside the block
        case 4: return {3 * sx, 2 * sy};
        default: return {sx, 3 * sy};
    }
}

}  // namespace detail

/// Constructive forward direction of the grid-vs-king transformation: lifts
/// a Cartesian grid embedding of g to a king's-graph embedding of
/// tv_gadget_transform(g).output. The grid drawing is rotated 45 degrees and
/// stretched so grid neighbors sit five diagonal steps apart; each T(v)
/// fills the 5x5 block around its root.
inline Embedding tv_witness_lift(const Graph& g, const Embedding& grid_emb) {
    if (grid_emb.host.kind != HostSpec::Kind::Path ||
        grid_emb.host.product != ProductKind::Cartesian)
        throw std::invalid_argument("tv_witness_lift: witness host is not a Cartesian grid");
    if (!verify_embedding(grid_emb).valid())
        throw std::invalid_argument("tv_witness_lift: input grid embedding is invalid");
    TransformArtifact art = tv_gadget_transform(g);

    // king-plane center of each block (unshifted)
    std::vector<Cell> center(g.n);
    for (int v = 0; v < g.n; ++v) {
        int gx = grid_emb.map[v].h, gy = grid_emb.map[v].row;
        center[v] = {5 * (gx + gy), 5 * (gx - gy)};
    }
    // port corner assignment: edges claim the corner facing their neighbor,
    // in the same ascending edge order used by tv_gadget_transform
    std::vector<std::array<int, 4>> port_corner(g.n, {-1, -1, -1, -1});
    std::vector<int> next_port(g.n, 0);
    auto corner_for = [&](int u, int v) {
        int sx = (center[v].h - center[u].h) / 5;
        int sy = (center[v].row - center[u].row) / 5;
        for (int c = 0; c < 4; ++c)
            if (detail::kCornerSign[c].dx == sx && detail::kCornerSign[c].dy == sy) return c;
        throw std::logic_error("tv_witness_lift: neighbors not at diagonal distance 5");
    };
    for (auto [u, v] : g.edges) {
        port_corner[u][next_port[u]++] = corner_for(u, v);
        port_corner[v][next_port[v]++] = corner_for(v, u);
    }
    for (int v = 0; v < g.n; ++v) {  // unused T_2 copies take leftover corners
        std::array<char, 4> taken{};
        for (int q = 0; q < next_port[v]; ++q) taken[port_corner[v][q]] = 1;
        int free_corner = 0;
        for (int q = next_port[v]; q < 4; ++q) {
            while (taken[free_corner]) ++free_corner;
            port_corner[v][q] = free_corner;
            taken[free_corner] = 1;
        }
    }

    std::vector<Cell> raw(art.output.n);
    auto place = [&](int vertex, int v, detail::Offset off) {
        raw[vertex] = {center[v].h + off.dx, center[v].row + off.dy};
    };
    for (int v = 0; v < g.n; ++v) {
        place(37 * v, v, {0, 0});
        for (int t = 0; t < 4; ++t) {
            int mid = 37 * v + 1 + 3 * t;
            place(mid, v, detail::kT1Mid[t]);
            place(mid + 1, v, detail::kT1Ends[t][0]);
            place(mid + 2, v, detail::kT1Ends[t][1]);
        }
        for (int q = 0; q < 4; ++q) {
            int s = 37 * v + 13 + 6 * q;
            int corner = port_corner[v][q];
            for (int which = 0; which < 6; ++which)
                place(s + which, v, detail::t2_cell(corner, which));
        }
    }
    int min_h = raw[0].h, min_r = raw[0].row, max_h = raw[0].h, max_r = raw[0].row;
    for (const Cell& c : raw) {
        min_h = std::min(min_h, c.h);
        min_r = std::min(min_r, c.row);
        max_h = std::max(max_h, c.h);
        max_r = std::max(max_r, c.row);
    }
    Embedding out;
    out.guest = art.output;
    out.host = HostSpec::path(max_h - min_h + 1, ProductKind::Strong, max_r - min_r + 1);
    out.map.resize(art.output.n);
    for (int i = 0; i < art.output.n; ++i) out.map[i] = {raw[i].h - min_h, raw[i].row - min_r};
    return out;
}

/// Pads every original vertex to degree at least k by attaching leaves.
inline TransformArtifact leaf_pad(const Graph& g, int k) {
    if (k != 4 && k != 6) throw std::invalid_argument("leaf_pad: k must be 4 or 6");
    TransformArtifact art;
    art.provenance = "leaf_pad_" + std::to_string(k);
    std::vector<Edge> es = g.edges;
    int next = g.n;
    for (int v = 0; v < g.n; ++v) {
        int need = std::max(0, k - g.degree(v));
        for (int i = 0; i < need; ++i) {
            es.push_back({v, next});
            art.port_map[v].push_back(next);
            ++next;
        }
    }
    art.output = make_graph(next, std::move(es));
    for (int v = g.n; v < next; ++v) art.output.vtag[v] = "pad-leaf";
    return art;
}

/// Adds one vertex adjacent to all of V(g); the new vertex has id |V(g)|.
inline TransformArtifact universal_vertex(const Graph& g) {
    TransformArtifact art;
    art.provenance = "universal_vertex";
    std::vector<Edge> es = g.edges;
    for (int v = 0; v < g.n; ++v) es.push_back({v, g.n});
    art.output = make_graph(g.n + 1, std::move(es));
    art.output.vtag[g.n] = "universal";
    return art;
}

}  // namespace rowprod
