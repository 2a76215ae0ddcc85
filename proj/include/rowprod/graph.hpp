#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rowprod {

using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Finite simple undirected graph on vertices 0..n-1.
/// Edges are stored normalized (u < v) and sorted; adjacency lists sorted.
/// vtag/etag carry optional role strings for gadget bookkeeping.
struct Graph {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<int>> adj;
    std::map<int, std::string> vtag;
    std::map<Edge, std::string> etag;

    int edge_count() const { return static_cast<int>(edges.size()); }

    bool has_edge(int u, int v) const {
        if (u == v) return false;
        const auto& a = adj[u];
        return std::binary_search(a.begin(), a.end(), v);
    }

    int degree(int v) const { return static_cast<int>(adj[v].size()); }
};

inline Graph make_graph(int n, std::vector<Edge> edges) {
    if (n < 0) throw std::invalid_argument("make_graph: negative vertex count");
    for (auto& e : edges) {
        if (e.first == e.second) throw std::invalid_argument("make_graph: loop edge");
        if (e.first < 0 || e.second < 0 || e.first >= n || e.second >= n)
            throw std::invalid_argument("make_graph: edge endpoint out of range");
        e = make_edge(e.first, e.second);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("make_graph: duplicate edge");
    Graph g;
    g.n = n;
    g.edges = std::move(edges);
    g.adj.assign(n, {});
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    return g;
}

inline Graph path_graph(int n) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
    return make_graph(n, std::move(es));
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.push_back(make_edge(i, (i + 1) % n));
    return make_graph(n, std::move(es));
}

inline Graph complete_graph(int n) {
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.push_back({u, v});
    return make_graph(n, std::move(es));
}

/// Star K_{1,l}: center 0, leaves 1..l.
inline Graph star_graph(int leaves) {
    std::vector<Edge> es;
    for (int i = 1; i <= leaves; ++i) es.push_back({0, i});
    return make_graph(leaves + 1, std::move(es));
}

/// Caterpillar: spine vertices 0..spine-1 as a path, legsPerSpine leaves per
/// spine vertex, legs numbered spine + i*legsPerSpine + j.
inline Graph caterpillar_graph(int spine, int legs_per_spine) {
    if (spine < 1 || legs_per_spine < 0)
        throw std::invalid_argument("caterpillar_graph: bad parameters");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < spine; ++i) es.push_back({i, i + 1});
    for (int i = 0; i < spine; ++i)
        for (int j = 0; j < legs_per_spine; ++j)
            es.push_back({i, spine + i * legs_per_spine + j});
    return make_graph(spine + spine * legs_per_spine, std::move(es));
}

inline std::vector<int> component_of(const Graph& g, int start) {
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{start}, comp;
    seen[start] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        comp.push_back(v);
        for (int w : g.adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    std::sort(comp.begin(), comp.end());
    return comp;
}

inline std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<char> seen(g.n, 0);
    std::vector<std::vector<int>> out;
    for (int v = 0; v < g.n; ++v) {
        if (seen[v]) continue;
        auto comp = component_of(g, v);
        for (int w : comp) seen[w] = 1;
        out.push_back(std::move(comp));
    }
    return out;
}

inline bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    return static_cast<int>(component_of(g, 0).size()) == g.n;
}

inline bool is_tree(const Graph& g) {
    return g.n >= 1 && g.edge_count() == g.n - 1 && is_connected(g);
}

/// Subgraph induced on `verts` (which must be sorted), relabeled 0..k-1 in
/// the order given. Tags are dropped.
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    std::map<int, int> idx;
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) idx[verts[i]] = i;
    std::vector<Edge> es;
    for (auto [u, v] : g.edges) {
        auto iu = idx.find(u), iv = idx.find(v);
        if (iu != idx.end() && iv != idx.end())
            es.push_back(make_edge(iu->second, iv->second));
    }
    return make_graph(static_cast<int>(verts.size()), std::move(es));
}

}  // namespace rowprod
