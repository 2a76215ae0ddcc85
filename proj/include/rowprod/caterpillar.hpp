#pragma once

#include <cstdint>
#include <set>

#include "rowprod/embedding.hpp"
#include "rowprod/graph.hpp"
#include "rowprod/recognize.hpp"

namespace rowprod {

/// Spine degree sequence of a caterpillar, scanned left-to-right as returned
/// by recognize_caterpillar. The decision condition is symmetric under
/// reversal.
struct SpineProfile {
    std::vector<int> degrees;
};

inline SpineProfile spine_profile(const Graph& g) {
    auto cat = recognize_caterpillar(g);
    if (!cat) throw std::invalid_argument("spine_profile: input is not a caterpillar");
    SpineProfile p;
    for (int v : cat->spine) p.degrees.push_back(g.degree(v));
    return p;
}

struct FastDecision {
    bool embeddable = false;
    std::int64_t operations = 0;  // loop iterations, for the linearity check
};

/// Single-pass maximum-subarray scan over (deg(v_i) - 6): the caterpillar
/// fits the king's graph iff no contiguous subsequence sums to 3 or more.
inline FastDecision decide_fast_profile(const SpineProfile& p) {
    FastDecision d;
    std::int64_t best = 0, run = 0;
    for (int deg : p.degrees) {
        ++d.operations;
        run = std::max<std::int64_t>(0, run) + (deg - 6);
        best = std::max(best, run);
        if (best >= 3) {
            d.embeddable = false;
            return d;
        }
    }
    d.embeddable = true;
    return d;
}

inline bool decide_fast(const Graph& g) {
    return decide_fast_profile(spine_profile(g)).embeddable;
}

/// O(k^2) oracle: checks sum(deg) <= 6|Q| + 2 for every subpath Q explicitly.
inline bool direct_condition_check(const SpineProfile& p) {
    int k = static_cast<int>(p.degrees.size());
    for (int i = 0; i < k; ++i) {
        std::int64_t sum = 0;
        for (int j = i; j < k; ++j) {
            sum += p.degrees[j];
            if (sum > 6LL * (j - i + 1) + 2) return false;
        }
    }
    return true;
}

/// Constructive half of the decision: spine on the main diagonal of the
/// king's graph, legs greedily at the free adjacent cell with minimum x+y
/// (lexicographic (x,y) among ties). Coordinates are shifted by +1 so the
/// construction never needs negative indices; host truncation Path(k+2).
inline Embedding construct_diagonal_embedding(const Graph& g) {
    auto cat = recognize_caterpillar(g);
    if (!cat) throw std::invalid_argument("construct_diagonal_embedding: not a caterpillar");
    SpineProfile prof;
    for (int v : cat->spine) prof.degrees.push_back(g.degree(v));
    if (!decide_fast_profile(prof).embeddable)
        throw std::invalid_argument(
            "construct_diagonal_embedding: caterpillar fails the degree condition");
    int k = static_cast<int>(cat->spine.size());
    int side = k + 2;
    Embedding e;
    e.guest = g;
    e.host = HostSpec::path(side, ProductKind::Strong, side);
    e.map.resize(g.n);
    std::set<Cell> occupied;
    for (int i = 0; i < k; ++i) {
        e.map[cat->spine[i]] = {i + 1, i + 1};
        occupied.insert({i + 1, i + 1});
    }
    for (int i = 0; i < k; ++i) {
        Cell c = {i + 1, i + 1};
        auto legs_it = cat->legs.find(cat->spine[i]);
        if (legs_it == cat->legs.end()) continue;
        for (int leaf : legs_it->second) {
            Cell best{-1, -1};
            for (int dx = -1; dx <= 1; ++dx)
                for (int dy = -1; dy <= 1; ++dy) {
                    if (dx == 0 && dy == 0) continue;
                    Cell cand{c.h + dx, c.row + dy};
                    if (cand.h < 0 || cand.row < 0 || cand.h >= side || cand.row >= side)
                        continue;
                    if (occupied.count(cand)) continue;
                    if (best.h == -1 || cand.h + cand.row < best.h + best.row ||
                        (cand.h + cand.row == best.h + best.row && cand < best))
                        best = cand;
                }
            if (best.h == -1)
                throw std::logic_error(
                    "construct_diagonal_embedding: greedy placement failed despite the "
                    "degree condition (internal invariant violated)");
            e.map[leaf] = best;
            occupied.insert(best);
        }
    }
    return e;
}

}  // namespace rowprod
