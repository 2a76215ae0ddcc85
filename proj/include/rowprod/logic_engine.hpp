#pragma once

#include <array>
#include <cstdlib>
#include <set>
#include <string>

#include "rowprod/embedding.hpp"
#include "rowprod/graph.hpp"
#include "rowprod/product.hpp"

namespace rowprod {

/// Not-all-equal 3SAT instance. Literals are signed 1-based variable indices;
/// clauses hold two or three literals (two only for the spacer x_n v -x_n).
struct NaeInstance {
    int n = 0;
    std::vector<std::vector<int>> clauses;
    bool normalized = false;
};

inline void validate_instance(const NaeInstance& inst) {
    if (inst.n <= 0) throw std::invalid_argument("nae instance: need at least one variable");
    for (const auto& cl : inst.clauses) {
        if (cl.size() < 2 || cl.size() > 3)
            throw std::invalid_argument("nae instance: clause must have 2 or 3 literals");
        for (int lit : cl)
            if (lit == 0 || std::abs(lit) > inst.n)
                throw std::invalid_argument("nae instance: literal out of range");
    }
}

inline bool is_spacer(const std::vector<int>& clause, int n) {
    std::set<int> lits(clause.begin(), clause.end());
    return lits == std::set<int>{-n, n};
}

/// Appends the spacer clause (x_n v -x_n) when absent; it is NAE-satisfied by
/// every assignment, so satisfiability is unaffected.
inline NaeInstance ensure_spacer(NaeInstance inst) {
    validate_instance(inst);
    bool found = false;
    for (const auto& cl : inst.clauses)
        if (is_spacer(cl, inst.n)) found = true;
    if (!found) inst.clauses.push_back({inst.n, -inst.n});
    inst.normalized = true;
    return inst;
}

/// True iff every clause has at least one true and at least one false literal.
inline bool engine_feasible(const NaeInstance& inst, const std::vector<bool>& assignment) {
    if (assignment.size() != static_cast<std::size_t>(inst.n))
        throw std::invalid_argument("engine_feasible: assignment size mismatch");
    for (const auto& cl : inst.clauses) {
        bool any_true = false, any_false = false;
        for (int lit : cl) {
            bool val = lit > 0 ? assignment[lit - 1] : !assignment[-lit - 1];
            (val ? any_true : any_false) = true;
        }
        if (!any_true || !any_false) return false;
    }
    return true;
}

/// The orientation-forced logic engine G0: a frame of three t-b paths, one
/// armature per variable, and one flag leaf per (literal, clause) pair where
/// the literal is absent from the clause. Carries the canonical drawing
/// coordinates (y fixed; x fixed up to per-armature horizontal flips).
struct LogicEngineGadget {
    struct VertexInfo {
        enum class Role { Middle, Outer, Armature, Flag };
        Role role = Role::Middle;
        int y = 0;
        int x = 0;          // canonical x; armatures store the magnitude only
        int var = 0;        // 1-based, armature and flag vertices
        bool neg = false;   // which literal path of the armature
        int clause = -1;    // flag vertices
    };

    NaeInstance inst;
    int H = 0;  // vertical extent: middle path has H vertical edges
    Graph graph;
    OrientationConstraint labels;
    std::vector<VertexInfo> info;

    bool is_attach(int v) const {
        const VertexInfo& vi = info[v];
        return vi.role == VertexInfo::Role::Middle &&
               ((vi.y >= 1 && vi.y <= inst.n) || (vi.y >= H - inst.n && vi.y <= H - 1));
    }

    /// Armature vertices plus the middle-path vertices they attach at; vertical
    /// edges whose lower endpoint lies here receive no arrow-head later.
    bool armature_member(int v) const {
        return info[v].role == VertexInfo::Role::Armature || is_attach(v);
    }

    /// Vertical edges skipped by the arrow-head pass: armature lower endpoints,
    /// and t/b. An arrow-head at b would tie both outer paths to the middle
    /// path in a K_4 minor (the horizontal neighbours of b are frame
    /// subdivision vertices, not pendant leaves), so that edge stays bare; its
    /// orientation is still forced by the spacer-row counting argument.
    bool arrow_exempt(int v) const { return armature_member(v) || v == 0 || v == H; }
};

inline bool literal_occurs(const std::vector<int>& clause, int lit) {
    for (int l : clause)
        if (l == lit) return true;
    return false;
}

inline LogicEngineGadget build_g0(const NaeInstance& inst) {
    validate_instance(inst);
    if (!inst.normalized)
        throw std::invalid_argument("build_g0: instance must be normalized (ensure_spacer)");
    const int n = inst.n;
    const int m = static_cast<int>(inst.clauses.size());
    const int H = m + 2 * n + 1;

    LogicEngineGadget g;
    g.inst = inst;
    g.H = H;
    using VI = LogicEngineGadget::VertexInfo;
    std::vector<Edge> es;
    std::map<int, std::string> tags;
    auto add_vertex = [&](VI vi, std::string tag) {
        int id = static_cast<int>(g.info.size());
        g.info.push_back(vi);
        tags[id] = std::move(tag);
        return id;
    };
    auto add_edge = [&](int u, int v, Orientation o) {
        es.push_back(make_edge(u, v));
        g.labels.labels[make_edge(u, v)] = o;
    };

    // middle path: id == y
    for (int y = 0; y <= H; ++y)
        add_vertex({VI::Role::Middle, y, 0, 0, false, -1}, y == 0 ? "b" : (y == H ? "t" : "middle"));
    for (int y = 0; y < H; ++y) add_edge(y, y + 1, Orientation::Vertical);
    const int t = H, b = 0;

    // outer paths: 2n horizontal, H vertical, 2n horizontal each
    for (int side : {-1, +1}) {
        std::string tag = side < 0 ? "outer:left" : "outer:right";
        int prev = t;
        for (int ax = 1; ax <= 2 * n; ++ax) {
            int id = add_vertex({VI::Role::Outer, H, side * ax, 0, false, -1}, tag);
            add_edge(prev, id, Orientation::Horizontal);
            prev = id;
        }
        for (int y = H - 1; y >= 0; --y) {
            int id = add_vertex({VI::Role::Outer, y, side * 2 * n, 0, false, -1}, tag);
            add_edge(prev, id, Orientation::Vertical);
            prev = id;
        }
        for (int ax = 2 * n - 1; ax >= 1; --ax) {
            int id = add_vertex({VI::Role::Outer, 0, side * ax, 0, false, -1}, tag);
            add_edge(prev, id, Orientation::Horizontal);
            prev = id;
        }
        add_edge(prev, b, Orientation::Horizontal);
    }

    // armatures: for x_i, two paths attached at middle vertices y = H-i and
    // y = i, each 2n+1-2i horizontal + H-2i vertical + 2n+1-2i horizontal
    std::vector<std::vector<std::vector<int>>> column(
        n + 1, std::vector<std::vector<int>>(2, std::vector<int>(H + 1, -1)));
    for (int i = 1; i <= n; ++i) {
        int c = 2 * n + 1 - 2 * i;
        for (int negidx = 0; negidx < 2; ++negidx) {
            bool neg = negidx == 1;
            std::string tag = "armature:" + std::to_string(i) + (neg ? ":neg" : ":pos");
            int prev = H - i;  // middle vertex at y = H-i
            for (int ax = 1; ax <= c; ++ax) {
                int id = add_vertex({VI::Role::Armature, H - i, ax, i, neg, -1}, tag);
                add_edge(prev, id, Orientation::Horizontal);
                prev = id;
            }
            for (int y = H - i - 1; y >= i; --y) {
                int id = add_vertex({VI::Role::Armature, y, c, i, neg, -1}, tag);
                add_edge(prev, id, Orientation::Vertical);
                prev = id;
                column[i][negidx][y] = id;
            }
            for (int ax = c - 1; ax >= 1; --ax) {
                int id = add_vertex({VI::Role::Armature, i, ax, i, neg, -1}, tag);
                add_edge(prev, id, Orientation::Horizontal);
                prev = id;
            }
            add_edge(prev, i, Orientation::Horizontal);  // middle vertex at y = i
        }
    }

    // flags: leaf at the (armature of literal, clause row) crossing iff the
    // literal does not occur in the clause
    for (int j = 0; j < m; ++j) {
        int y = n + 1 + j;
        for (int i = 1; i <= n; ++i) {
            for (int negidx = 0; negidx < 2; ++negidx) {
                int lit = negidx == 1 ? -i : i;
                if (literal_occurs(inst.clauses[j], lit)) continue;
                std::string tag = "flag:" + std::to_string(i) + (negidx ? ":neg:" : ":pos:") +
                                  std::to_string(j);
                int id = add_vertex({VI::Role::Flag, y, 0, i, negidx == 1, j}, tag);
                add_edge(id, column[i][negidx][y], Orientation::Horizontal);
            }
        }
    }

    g.graph = make_graph(static_cast<int>(g.info.size()), std::move(es));
    g.graph.vtag = std::move(tags);
    return g;
}

namespace detail {

/// Side of the grid drawing taken by the (var, neg) armature path: the true
/// literal's path goes left (negative x).
inline int armature_side(const std::vector<bool>& assignment, int var, bool neg) {
    bool literal_true = neg ? !assignment[var - 1] : assignment[var - 1];
    return literal_true ? -1 : +1;
}

/// Deterministic flag packing for one clause row and side: given the armature
/// indices carrying a flag here (at most n-1 of them), pick i0 = the smallest
/// index without a flag; flags below i0 take the outer free column 2(n-i),
/// flags above take the inner free column 2(n+1-i). The two ranges are
/// disjoint and stay strictly between the middle path and the outer path.
inline std::map<int, int> pack_flags(const std::set<int>& flagged, int n) {
    int i0 = 1;
    while (flagged.count(i0)) ++i0;
    if (i0 > n) throw std::logic_error("pack_flags: a full flag row cannot be packed");
    std::map<int, int> slot;
    for (int i : flagged) {
        int s = i < i0 ? n - i : n + 1 - i;
        if (s < 1 || s > n - 1) throw std::logic_error("pack_flags: slot out of range");
        slot[i] = s;
    }
    return slot;
}

}  // namespace detail

/// Canonical orientation-constrained grid embedding of G0 for a feasible
/// assignment: frame fixed, armature of every true literal flipped left,
/// flags packed into the free even columns of their clause row.
inline Embedding witness_embedding(const LogicEngineGadget& g,
                                   const std::vector<bool>& assignment) {
    const int n = g.inst.n, H = g.H;
    if (!engine_feasible(g.inst, assignment))
        throw std::invalid_argument("witness_embedding: assignment is not a NAE solution");

    // flag columns, per (clause row, side)
    using VI = LogicEngineGadget::VertexInfo;
    std::map<std::pair<int, int>, std::set<int>> flagged;
    for (int v = 0; v < g.graph.n; ++v) {
        const VI& vi = g.info[v];
        if (vi.role != VI::Role::Flag) continue;
        flagged[{vi.clause, detail::armature_side(assignment, vi.var, vi.neg)}].insert(vi.var);
    }
    std::map<std::pair<int, int>, std::map<int, int>> slots;
    for (const auto& [key, vars] : flagged) slots[key] = detail::pack_flags(vars, n);

    Embedding e;
    e.guest = g.graph;
    e.host = HostSpec::path(H + 1, ProductKind::Cartesian, 4 * n + 1);
    e.map.resize(g.graph.n);
    for (int v = 0; v < g.graph.n; ++v) {
        const VI& vi = g.info[v];
        int x = 0;
        switch (vi.role) {
            case VI::Role::Middle:
            case VI::Role::Outer: x = vi.x; break;
            case VI::Role::Armature:
                x = detail::armature_side(assignment, vi.var, vi.neg) * vi.x;
                break;
            case VI::Role::Flag: {
                int side = detail::armature_side(assignment, vi.var, vi.neg);
                x = side * 2 * slots.at({vi.clause, side}).at(vi.var);
                break;
            }
        }
        e.map[v] = {vi.y, x + 2 * n};
    }
    return e;
}

/// Reads an assignment off a valid orientation-constrained embedding: x_i is
/// true iff its positive-literal armature path sits left of the middle path.
inline std::vector<bool> extract_assignment(const LogicEngineGadget& g, const Embedding& emb) {
    if (emb.guest.n != g.graph.n || emb.guest.edges != g.graph.edges)
        throw std::invalid_argument("extract_assignment: embedding is not of this gadget");
    if (!verify_embedding(emb, &g.labels).valid())
        throw std::invalid_argument("extract_assignment: embedding fails verification");
    int middle_row = emb.map[0].row;  // vertex 0 is b; the middle path is one column
    std::vector<bool> out(g.inst.n, false);
    using VI = LogicEngineGadget::VertexInfo;
    for (int v = 0; v < g.graph.n; ++v) {
        const VI& vi = g.info[v];
        if (vi.role == VI::Role::Armature && !vi.neg && vi.x == 1 && vi.y == g.H - vi.var)
            out[vi.var - 1] = emb.map[v].row < middle_row;
    }
    return out;
}

/// The G0 -> G1 -> G2 -> G pipeline. G1 triples the width (each horizontal
/// edge subdivided twice, 2-k horizontal leaves at each original vertex with
/// k horizontal edges). G2 adds arrow-heads at vertical edges whose lower
/// endpoint is off the armatures (strong variant only; arrow-heads need
/// diagonals). G attaches a K_{2,5} at every horizontal edge (strong) or
/// three disjoint two-vertex bridges (Cartesian).
struct PipelineGadget {
    ProductKind variant = ProductKind::Strong;
    Graph g1, g2, g;

    struct V1 {
        enum class Kind { Original, Subdivision, Leaf };
        Kind kind = Kind::Original;
        int orig = -1;   // original vertex (Original, Leaf)
        int hedge = -1;  // index into horizontal_g0 (Subdivision)
        int which = 0;   // Subdivision: 0 = next to the smaller endpoint; Leaf: rank
    };
    std::vector<V1> v1info;
    std::vector<Edge> horizontal_g0;  // original horizontal edges, sorted
    std::vector<std::array<int, 2>> hneigh;  // g1 horizontal neighbours per original vertex
    std::vector<Edge> arrow_base;     // vertical edges (lower, upper) that got arrow-heads
    std::vector<Edge> horizontal_g1;  // horizontal edges of g1 (and of g2)
    std::vector<int> bridge_base;     // first bridge vertex id per horizontal_g1 edge
};

inline PipelineGadget build_pipeline(const LogicEngineGadget& g, ProductKind variant) {
    PipelineGadget p;
    p.variant = variant;
    const int n0 = g.graph.n;
    using K = PipelineGadget::V1::Kind;

    for (auto [u, v] : g.graph.edges)
        if (g.labels.of(u, v) == Orientation::Horizontal) p.horizontal_g0.push_back({u, v});

    // G1
    p.v1info.resize(n0);
    for (int v = 0; v < n0; ++v) p.v1info[v] = {K::Original, v, -1, 0};
    std::vector<Edge> es1;
    for (auto [u, v] : g.graph.edges)
        if (g.labels.of(u, v) == Orientation::Vertical) es1.push_back({u, v});
    std::vector<std::vector<int>> hn(n0);
    auto add_hedge = [&](int a, int b) {
        es1.push_back(make_edge(a, b));
        p.horizontal_g1.push_back(make_edge(a, b));
    };
    for (int k = 0; k < static_cast<int>(p.horizontal_g0.size()); ++k) {
        auto [u, v] = p.horizontal_g0[k];
        int au = static_cast<int>(p.v1info.size());
        p.v1info.push_back({K::Subdivision, -1, k, 0});
        int av = static_cast<int>(p.v1info.size());
        p.v1info.push_back({K::Subdivision, -1, k, 1});
        add_hedge(u, au);
        add_hedge(au, av);
        add_hedge(av, v);
        hn[u].push_back(au);
        hn[v].push_back(av);
    }
    for (int v = 0; v < n0; ++v) {
        int k = static_cast<int>(hn[v].size());
        if (k > 2) throw std::logic_error("build_pipeline: vertex with >2 horizontal edges");
        for (int r = 0; r < 2 - k; ++r) {
            int leaf = static_cast<int>(p.v1info.size());
            p.v1info.push_back({K::Leaf, v, -1, r});
            add_hedge(v, leaf);
            hn[v].push_back(leaf);
        }
        p.hneigh.push_back({hn[v][0], hn[v][1]});
    }
    p.g1 = make_graph(static_cast<int>(p.v1info.size()), es1);

    // G2: arrow-heads (strong only; they embed along diagonals)
    std::vector<Edge> es2 = p.g1.edges;
    if (variant == ProductKind::Strong) {
        for (auto [a, c] : g.graph.edges) {
            if (g.labels.of(a, c) != Orientation::Vertical) continue;
            int lower = g.info[a].y < g.info[c].y ? a : c;
            int upper = lower == a ? c : a;
            if (g.arrow_exempt(lower)) continue;
            p.arrow_base.push_back({lower, upper});
            es2.push_back(make_edge(p.hneigh[lower][0], upper));
            es2.push_back(make_edge(p.hneigh[lower][1], upper));
        }
    }
    p.g2 = make_graph(p.g1.n, es2);

    // G: horizontal-edge anchors (K_{2,5} or three two-vertex bridges)
    std::vector<Edge> es3 = p.g2.edges;
    int next = p.g2.n;
    for (auto [u, v] : p.horizontal_g1) {
        p.bridge_base.push_back(next);
        if (variant == ProductKind::Strong) {
            for (int j = 0; j < 5; ++j) {
                es3.push_back({u, next});
                es3.push_back({v, next});
                ++next;
            }
        } else {
            for (int j = 0; j < 3; ++j) {
                es3.push_back({u, next});
                es3.push_back({next, next + 1});
                es3.push_back({next + 1, v});
                next += 2;
            }
        }
    }
    p.g = make_graph(next, std::move(es3));
    return p;
}

/// Constructive embedding of the final pipeline graph for a feasible
/// assignment: the G0 witness drawing with its columns tripled, arrow-heads
/// realized along diagonals, and the horizontal-edge anchors placed on leg
/// extensions of a caterpillar host.
inline Embedding pipeline_witness(const PipelineGadget& p, const LogicEngineGadget& g,
                                  const std::vector<bool>& assignment) {
    Embedding base = witness_embedding(g, assignment);
    const int n = g.inst.n, H = g.H;
    const int legs = p.variant == ProductKind::Strong ? 5 : 6;
    const int spine = H + 1;
    auto leg_id = [&](int s, int j) { return spine + s * legs + j; };

    Embedding e;
    e.guest = p.g;
    e.host = HostSpec::caterpillar(spine, legs, p.variant, 12 * n + 3);
    e.map.assign(p.g.n, {-1, -1});
    auto col3 = [&](int v0) { return 3 * base.map[v0].row + 1; };

    using K = PipelineGadget::V1::Kind;
    std::vector<std::vector<int>> taken(g.graph.n);  // companion directions in use
    for (auto [u, v] : p.horizontal_g0) {
        int d = col3(v) > col3(u) ? 1 : -1;
        taken[u].push_back(d);
        taken[v].push_back(-d);
    }
    for (int i = 0; i < p.g1.n; ++i) {
        const auto& vi = p.v1info[i];
        switch (vi.kind) {
            case K::Original: e.map[i] = {base.map[vi.orig].h, col3(vi.orig)}; break;
            case K::Subdivision: {
                auto [u, v] = p.horizontal_g0[vi.hedge];
                int d = col3(v) > col3(u) ? 1 : -1;
                e.map[i] = vi.which == 0 ? Cell{base.map[u].h, col3(u) + d}
                                         : Cell{base.map[v].h, col3(v) - d};
                break;
            }
            case K::Leaf: {
                std::vector<int> free;
                for (int d : {-1, +1})
                    if (std::find(taken[vi.orig].begin(), taken[vi.orig].end(), d) ==
                        taken[vi.orig].end())
                        free.push_back(d);
                e.map[i] = {base.map[vi.orig].h, col3(vi.orig) + free.at(vi.which)};
                break;
            }
        }
    }
    for (std::size_t k = 0; k < p.horizontal_g1.size(); ++k) {
        auto [u, v] = p.horizontal_g1[k];
        int y = e.map[u].h;
        int ru = e.map[u].row, rv = e.map[v].row;
        int lo = std::min(ru, rv);
        int id = p.bridge_base[k];
        if (p.variant == ProductKind::Strong) {
            for (int j = 0; j < 5; ++j) e.map[id + j] = {leg_id(y, j), lo};
        } else {
            int bank = (lo % 2) * 3;
            for (int j = 0; j < 3; ++j) {
                e.map[id + 2 * j] = {leg_id(y, bank + j), ru};
                e.map[id + 2 * j + 1] = {leg_id(y, bank + j), rv};
            }
        }
    }
    return e;
}

}  // namespace rowprod
