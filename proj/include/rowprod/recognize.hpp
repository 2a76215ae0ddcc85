#pragma once

#include <map>
#include <optional>
#include <vector>

#include "rowprod/graph.hpp"

namespace rowprod {

struct CaterpillarDecomposition {
    std::vector<int> spine;               // non-leaf vertices in path order
    std::map<int, std::vector<int>> legs; // spine vertex -> attached leaves
};

/// Caterpillar recognition: a tree whose non-leaf vertices form a path.
/// K_1 and K_2 are accepted with a one-vertex spine (lowest id); a path's
/// spine is its set of internal vertices.
inline std::optional<CaterpillarDecomposition> recognize_caterpillar(const Graph& g) {
    if (!is_tree(g)) return std::nullopt;
    CaterpillarDecomposition out;
    if (g.n <= 2) {
        out.spine = {0};
        for (int v = 1; v < g.n; ++v) out.legs[0].push_back(v);
        return out;
    }
    std::vector<int> spine_set;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) >= 2) spine_set.push_back(v);
    // spine_set nonempty for n >= 3
    std::vector<char> on_spine(g.n, 0);
    for (int v : spine_set) on_spine[v] = 1;
    // Non-leaf vertices must induce a path: degrees within the set <= 2,
    // exactly two (or zero, for a single spine vertex) endpoints, connected.
    std::vector<int> ends;
    for (int v : spine_set) {
        int d = 0;
        for (int w : g.adj[v]) d += on_spine[w];
        if (d > 2) return std::nullopt;
        if (d <= 1) ends.push_back(v);
    }
    if (spine_set.size() == 1) {
        out.spine = spine_set;
    } else {
        if (ends.size() != 2) return std::nullopt;
        // walk the path from the lower-id endpoint
        int cur = std::min(ends[0], ends[1]), prev = -1;
        while (cur != -1) {
            out.spine.push_back(cur);
            int next = -1;
            for (int w : g.adj[cur])
                if (on_spine[w] && w != prev) next = w;
            prev = cur;
            cur = next;
        }
        if (out.spine.size() != spine_set.size()) return std::nullopt;
    }
    for (int v = 0; v < g.n; ++v) {
        if (on_spine[v]) continue;
        // leaf; in a tree its unique neighbor must be a spine vertex
        int p = g.adj[v][0];
        if (!on_spine[p]) return std::nullopt;
        out.legs[p].push_back(v);
    }
    return out;
}

/// Series-parallel test by exhaustive reduction: delete degree-1 vertices,
/// suppress degree-2 vertices, merge parallel edges; true iff a single edge
/// remains. Multi-edges arise only transiently inside the reduction.
inline bool is_series_parallel(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("is_series_parallel: disconnected input");
    if (g.n <= 2) return true;
    // multigraph as multiset adjacency counts
    int n = g.n;
    std::vector<std::map<int, int>> madj(n);
    for (auto [u, v] : g.edges) {
        madj[u][v]++;
        madj[v][u]++;
    }
    std::vector<char> alive(n, 1);
    int alive_count = n;
    auto deg = [&](int v) {
        int d = 0;
        for (auto& [w, c] : madj[v]) d += c;
        return d;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n && alive_count > 2; ++v) {
            if (!alive[v]) continue;
            // merge parallel edges at v
            for (auto& [w, c] : madj[v]) {
                if (c > 1) {
                    c = 1;
                    madj[w][v] = 1;
                    changed = true;
                }
            }
            int d = deg(v);
            if (d == 0) continue;
            if (d == 1) {
                int w = madj[v].begin()->first;
                madj[w].erase(v);
                madj[v].clear();
                alive[v] = 0;
                --alive_count;
                changed = true;
            } else if (d == 2) {
                auto it = madj[v].begin();
                int a = it->first;
                ++it;
                int b = (it == madj[v].end()) ? a : it->first;
                if (a == b) continue;  // parallel pair, handled next sweep
                madj[a].erase(v);
                madj[b].erase(v);
                madj[a][b]++;
                madj[b][a]++;
                madj[v].clear();
                alive[v] = 0;
                --alive_count;
                changed = true;
            }
        }
    }
    if (alive_count != 2) return false;
    int u = -1, v = -1;
    for (int i = 0; i < n; ++i)
        if (alive[i]) (u == -1 ? u : v) = i;
    return madj[u].count(v) && madj[u][v] >= 1;
}

inline bool is_bipartite(const Graph& g) {
    std::vector<int> color(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.adj[v]) {
                if (color[w] == -1) {
                    color[w] = color[v] ^ 1;
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace rowprod
