#pragma once

#include <array>
#include <numeric>
#include <string>

#include "rowprod/embedding.hpp"
#include "rowprod/graph.hpp"
#include "rowprod/product.hpp"

namespace rowprod {

/// 3-partition instance: 3n positive values to be split into n triples, each
/// summing to B. Normalized instances have every value divisible by 8.
struct PartitionInstance {
    std::vector<int> a;
    int n = 0;
    int B = 0;
};

inline PartitionInstance normalize_instance(std::vector<int> raw, int n) {
    if (n <= 0 || raw.size() != static_cast<std::size_t>(3 * n))
        throw std::invalid_argument("normalize_instance: need exactly 3n values");
    long long sum = 0;
    for (int v : raw) {
        if (v <= 0) throw std::invalid_argument("normalize_instance: values must be positive");
        sum += v;
    }
    if (sum % n != 0)
        throw std::invalid_argument("normalize_instance: total is not divisible by n");
    bool multiples = (sum / n) % 8 == 0;
    for (int v : raw)
        if (v % 8 != 0) multiples = false;
    if (!multiples)
        for (int& v : raw) v *= 8;
    PartitionInstance inst;
    inst.a = std::move(raw);
    inst.n = n;
    inst.B = static_cast<int>(std::accumulate(inst.a.begin(), inst.a.end(), 0LL) / n);
    return inst;
}

/// The reduction tree: a frame path (two blockers, n group-gaps, fold-gaps)
/// whose c-vertices each carry 6 leaves, plus one paddle per value a_i:
/// a handle of n(B+8)-1 plain vertices from the anchor Z to a blade of a_i
/// c-vertices. Canonical frame coordinates put Z at x = 0.
struct PaddleTree {
    struct VertexInfo {
        enum class Role { FrameC, FrameL, Handle, BladeC, CLeaf };
        Role role = Role::FrameC;
        int x = 0;       // frame vertices: canonical center-row x (gap vertices
                         // store the x of the center-row cell they skip)
        int paddle = -1; // Handle and BladeC
        int index = 0;   // position within the run (0 = nearest the anchor)
        int parent = -1; // CLeaf: the c-vertex it hangs from
        int group = -1;  // FrameL: group-gap index, or -1 for fold-gap cells
    };

    PartitionInstance inst;
    Graph tree;
    std::vector<VertexInfo> info;
    int anchor = -1;  // Z
    int unit = 0;     // n(B+8)
    int folds = 0;    // n(B+8)/8

    std::vector<std::vector<int>> handle;  // per paddle, from Z outward
    std::vector<std::vector<int>> blade;   // per paddle, index 0 adjoins the handle
};

inline PaddleTree build_paddle_tree(const PartitionInstance& inst) {
    if (inst.B % 8 != 0)
        throw std::invalid_argument("build_paddle_tree: instance is not normalized");
    for (int v : inst.a)
        if (v % 8 != 0 || v < 8)
            throw std::invalid_argument("build_paddle_tree: instance is not normalized");
    const int n = inst.n, B = inst.B;
    const int unit = n * (B + 8);
    PaddleTree t;
    t.inst = inst;
    t.unit = unit;
    t.folds = unit / 8;

    using VI = PaddleTree::VertexInfo;
    std::vector<Edge> es;
    std::map<int, std::string> tags;
    auto add = [&](VI vi, std::string tag) {
        int id = static_cast<int>(t.info.size());
        t.info.push_back(vi);
        tags[id] = std::move(tag);
        return id;
    };

    // frame path, left to right; prev chains the path edges
    int prev = -1;
    auto chain = [&](int id) {
        if (prev != -1) es.push_back(make_edge(prev, id));
        prev = id;
    };
    for (int j = 0; j < unit; ++j)  // left blocker
        chain(add({VI::Role::FrameC, -2 * unit + 1 + j, -1, j, -1, -1}, "blocker:left"));
    for (int g = 0; g < n; ++g) {  // group-gaps: B gap vertices, then 8 c
        int base = -(n - 1 - g) * (B + 8);  // x of the gap's last c-vertex
        for (int j = 0; j < B; ++j)
            chain(add({VI::Role::FrameL, base - B - 7 + j, -1, j, -1, g},
                      "group-gap:" + std::to_string(g)));
        for (int j = 0; j < 8; ++j)
            chain(add({VI::Role::FrameC, base - 7 + j, -1, j, -1, g},
                      "group-gap:" + std::to_string(g)));
    }
    t.anchor = prev;  // Z: the last c-vertex of the last group-gap, x = 0
    tags[t.anchor] = "anchor";
    for (int k = 0; k < t.folds; ++k) {  // fold-gaps: 3 c, then 1 gap vertex
        for (int j = 0; j < 3; ++j)
            chain(add({VI::Role::FrameC, 4 * k + 1 + j, -1, j, -1, -1},
                      "fold-gap:" + std::to_string(k)));
        chain(add({VI::Role::FrameL, 4 * k + 4, -1, 3, -1, -1},
                  "fold-gap:" + std::to_string(k)));
    }
    for (int j = 0; j < unit; ++j)  // right blocker
        chain(add({VI::Role::FrameC, 4 * t.folds + 1 + j, -1, j, -1, -1}, "blocker:right"));

    // paddles: handle of unit-1 vertices from Z, then the blade
    for (int i = 0; i < 3 * n; ++i) {
        std::string tag = "paddle:" + std::to_string(i);
        prev = t.anchor;
        std::vector<int> h, bl;
        for (int j = 0; j < unit - 1; ++j) {
            int id = add({VI::Role::Handle, 0, i, j, -1, -1}, tag);
            chain(id);
            h.push_back(id);
        }
        for (int j = 0; j < inst.a[i]; ++j) {
            int id = add({VI::Role::BladeC, 0, i, j, -1, -1}, tag);
            chain(id);
            bl.push_back(id);
        }
        t.handle.push_back(std::move(h));
        t.blade.push_back(std::move(bl));
    }

    // 6 leaves per c-vertex (frame and blade alike)
    int c_count = static_cast<int>(t.info.size());
    for (int v = 0; v < c_count; ++v) {
        if (t.info[v].role != VI::Role::FrameC && t.info[v].role != VI::Role::BladeC) continue;
        for (int j = 0; j < 6; ++j) {
            int id = add({VI::Role::CLeaf, 0, -1, j, v, -1}, "leaf");
            es.push_back(make_edge(v, id));
        }
    }

    t.tree = make_graph(static_cast<int>(t.info.size()), std::move(es));
    t.tree.vtag = std::move(tags);
    return t;
}

namespace detail {

inline void validate_groups(const PartitionInstance& inst,
                            const std::vector<std::array<int, 3>>& groups) {
    if (groups.size() != static_cast<std::size_t>(inst.n))
        throw std::invalid_argument("partition groups: need exactly n triples");
    std::vector<char> used(3 * inst.n, 0);
    for (const auto& g : groups) {
        int sum = 0;
        for (int i : g) {
            if (i < 0 || i >= 3 * inst.n || used[i])
                throw std::invalid_argument("partition groups: index out of range or repeated");
            used[i] = 1;
            sum += inst.a[i];
        }
        if (sum != inst.B)
            throw std::invalid_argument("partition groups: triple does not sum to B");
    }
}

}  // namespace detail

/// Constructive embedding of the paddle tree into Star(6+6n) x P for a valid
/// partition. The center row hosts all c-vertices; leaf-rows 1..6 take the
/// c-leaves, with row 1 doubling for the fold-gap vertices (the center cell
/// below them is free, so no c-leaf occupies that column); group-gap vertices
/// ride the first private leaf-row of the group's rightmost paddle, which is
/// unused left of that paddle's blade. Each handle runs outward on its second
/// private row, dips into the free center cell at x = d_i, and returns on the
/// first one to the blade.
inline Embedding partition_witness(const PaddleTree& t,
                                   const std::vector<std::array<int, 3>>& groups) {
    detail::validate_groups(t.inst, groups);
    const int n = t.inst.n, B = t.inst.B, unit = t.unit;
    const int shift = 2 * unit - 1;  // -x of the leftmost frame vertex
    const int rows = 4 * t.folds + unit + shift + 1;
    auto row = [&](int x) { return x + shift; };
    using VI = PaddleTree::VertexInfo;

    // blade layout: group g's free block is the B cells left of its 8 group
    // c-vertices; the three blades fill it left to right in the order given
    std::vector<int> v_x(3 * n, 0);   // canonical x of the rightmost blade cell
    std::vector<int> gap_row(n, -1);  // leaf-row hosting the group's gap vertices
    for (int g = 0; g < n; ++g) {
        int right = -(n - 1 - g) * (B + 8) - 8;
        int cursor = right - B;
        for (int i : groups[g]) {
            cursor += t.inst.a[i];
            v_x[i] = cursor;
        }
        gap_row[g] = 7 + 2 * groups[g][2];
    }
    std::vector<int> d(3 * n);
    for (int i = 0; i < 3 * n; ++i) d[i] = (unit + v_x[i]) / 2;  // v_x is negative

    Embedding e;
    e.guest = t.tree;
    e.host = HostSpec::star(6 + 6 * n, ProductKind::Strong, rows);
    e.map.assign(t.tree.n, {-1, -1});
    for (int v = 0; v < t.tree.n; ++v) {
        const VI& vi = t.info[v];
        switch (vi.role) {
            case VI::Role::FrameC: e.map[v] = {0, row(vi.x)}; break;
            case VI::Role::FrameL:
                e.map[v] = {vi.group < 0 ? 1 : gap_row[vi.group], row(vi.x)};
                break;
            case VI::Role::BladeC:
                e.map[v] = {0, row(v_x[vi.paddle] - vi.index)};
                break;
            case VI::Role::Handle: {
                int i = vi.paddle, j = vi.index;
                if (j < d[i] - 1)
                    e.map[v] = {8 + 2 * i, row(j + 1)};  // outward
                else if (j == d[i] - 1)
                    e.map[v] = {0, row(d[i])};           // the fold-gap dip w_i
                else
                    e.map[v] = {7 + 2 * i, row(2 * d[i] - 1 - j)};  // back to the blade
                break;
            }
            case VI::Role::CLeaf:
                e.map[v] = {1 + vi.index, e.map[vi.parent].row};  // parents precede leaves
                break;
        }
    }
    return e;
}

/// Recovers the partition from any valid embedding: blades are grouped by the
/// group-gap window (between the embedded boundary c-vertices) that their
/// center-row cells occupy.
inline std::vector<std::array<int, 3>> extract_partition(const PaddleTree& t,
                                                         const Embedding& emb) {
    if (emb.guest.n != t.tree.n || emb.guest.edges != t.tree.edges)
        throw std::invalid_argument("extract_partition: embedding is not of this tree");
    if (!verify_embedding(emb).valid())
        throw std::invalid_argument("extract_partition: embedding fails verification");
    const int n = t.inst.n, B = t.inst.B;
    using VI = PaddleTree::VertexInfo;

    // window g: rows strictly between the embedded boundary c-vertices
    std::vector<std::pair<int, int>> window(n);
    for (int v = 0; v < t.tree.n; ++v) {
        const VI& vi = t.info[v];
        if (vi.role != VI::Role::FrameC) continue;
        for (int g = 0; g < n; ++g) {
            int base = -(n - 1 - g) * (B + 8);
            if (vi.x == base - B - 8) window[g].first = emb.map[v].row;
            if (vi.x == base - 7) window[g].second = emb.map[v].row;
        }
    }
    std::vector<std::vector<int>> members(n);
    for (int i = 0; i < 3 * n; ++i) {
        int found = -1;
        for (int g = 0; g < n; ++g) {
            auto [a, b] = window[g];
            int lo = std::min(a, b), hi = std::max(a, b);
            bool inside = true;
            for (int v : t.blade[i])
                if (emb.map[v].row <= lo || emb.map[v].row >= hi) inside = false;
            if (inside) found = g;
        }
        if (found < 0)
            throw std::invalid_argument("extract_partition: blade " + std::to_string(i) +
                                        " is not inside a group-gap window");
        members[found].push_back(i);
    }
    std::vector<std::array<int, 3>> out;
    for (int g = 0; g < n; ++g) {
        if (members[g].size() != 3)
            throw std::invalid_argument("extract_partition: group without exactly three blades");
        out.push_back({members[g][0], members[g][1], members[g][2]});
    }
    return out;
}

}  // namespace rowprod
