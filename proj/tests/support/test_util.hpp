#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "rcx/colouring.hpp"
#include "rcx/graph.hpp"

namespace rcx::test {

using Rng = rcx::detail::SplitMix64;

inline rcx::EdgeColouring random_colouring(const rcx::Graph& g, int colours, Rng& rng) {
    std::vector<int> by_edge(g.edge_count());
    for (int& c : by_edge) c = 1 + static_cast<int>(rng.next_below(colours));
    return rcx::EdgeColouring(g, std::move(by_edge));
}

// All labelled graphs of the given order, by edge-subset bitmask.
inline rcx::Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1) edges.emplace_back(u, v);
    return rcx::Graph(n, std::move(edges));
}

inline std::uint64_t graph_mask_count(int n) { return std::uint64_t{1} << (n * (n - 1) / 2); }

// Independent cycle counter: every vertex subset of size >= 3, every
// circular arrangement fixed up to rotation and reflection, checked against
// the adjacency relation. Deliberately dumb; usable for order <= 8 or so.
inline std::size_t brute_force_cycle_count(const rcx::Graph& g, int max_len = -1) {
    const int n = g.order();
    std::size_t count = 0;
    std::vector<int> subset;
    const auto consider = [&](const std::vector<int>& verts) {
        // arrangements: first vertex fixed to verts[0] (the minimum),
        // direction fixed by second < last
        std::vector<int> perm(verts.begin() + 1, verts.end());
        std::sort(perm.begin(), perm.end());
        do {
            if (perm.front() > perm.back()) continue;
            bool ok = g.adjacent(verts[0], perm.front()) && g.adjacent(perm.back(), verts[0]);
            for (std::size_t i = 0; ok && i + 1 < perm.size(); ++i)
                ok = g.adjacent(perm[i], perm[i + 1]);
            if (ok) ++count;
        } while (std::next_permutation(perm.begin(), perm.end()));
    };
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        subset.clear();
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) subset.push_back(v);
        if (subset.size() < 3) continue;
        if (max_len > 0 && static_cast<int>(subset.size()) > max_len) continue;
        consider(subset);
    }
    return count;
}

inline rcx::Graph petersen() {
    return rcx::Graph(10, {{0, 1},
                           {1, 2},
                           {2, 3},
                           {3, 4},
                           {0, 4},
                           {0, 5},
                           {1, 6},
                           {2, 7},
                           {3, 8},
                           {4, 9},
                           {5, 7},
                           {7, 9},
                           {6, 9},
                           {6, 8},
                           {5, 8}});
}

}  // namespace rcx::test
