#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "rowprod/graph.hpp"

namespace rowprod {

namespace detail {

inline std::string rooted_canon(const Graph& g, int v, int parent) {
    std::vector<std::string> kids;
    for (int w : g.adj[v])
        if (w != parent) kids.push_back(rooted_canon(g, w, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    s += ")";
    return s;
}

/// Tree centers via leaf stripping; 1 or 2 vertices.
inline std::vector<int> tree_centers(const Graph& g) {
    int n = g.n;
    if (n == 1) return {0};
    std::vector<int> deg(n);
    std::vector<int> layer, next;
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] <= 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        next.clear();
        for (int v : layer)
            for (int w : g.adj[v])
                if (--deg[w] == 1) next.push_back(w);
        layer = next;
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

}  // namespace detail

/// Isomorphism-invariant encoding of a free tree (AHU form rooted at the
/// tree center, or at the center edge for bicentral trees).
inline std::string free_tree_canon(const Graph& g) {
    auto centers = detail::tree_centers(g);
    if (centers.size() == 1) return detail::rooted_canon(g, centers[0], -1);
    std::string a = detail::rooted_canon(g, centers[0], centers[1]);
    std::string b = detail::rooted_canon(g, centers[1], centers[0]);
    if (b < a) std::swap(a, b);
    return "[" + a + b + "]";
}

/// One representative per isomorphism class of trees on n vertices, grown by
/// leaf attachment from the classes on n-1 vertices and deduplicated by
/// canonical form. Output sorted by canonical string.
inline std::vector<Graph> enumerate_free_trees(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_free_trees: n must be >= 1");
    std::vector<Graph> current{make_graph(1, {})};
    for (int size = 2; size <= n; ++size) {
        std::map<std::string, Graph> next;
        for (const Graph& t : current) {
            for (int v = 0; v < t.n; ++v) {
                auto es = t.edges;
                es.push_back({v, t.n});
                Graph grown = make_graph(t.n + 1, std::move(es));
                next.emplace(free_tree_canon(grown), grown);
            }
        }
        current.clear();
        for (auto& [canon, t] : next) current.push_back(std::move(t));
    }
    return current;
}

}  // namespace rowprod
