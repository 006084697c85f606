#pragma once

#include <homlor/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace homlor {

enum class Dedup {
    none,  // every labelled graph
    cheap, // keep only graphs whose (loop, degree) row keys are sorted
    exact  // keep only the permutation-minimal representative
};

// Enumerates unweighted graphs on exactly n vertices. exact dedup costs
// n! per graph; cheap dedup only sorts row keys and tolerates mild
// duplication, which wastes time but never correctness.
inline void for_each_unweighted_graph(int n, bool loops, bool connected_only, Dedup dedup,
                                      const std::function<void(const WeightedGraph&)>& fn,
                                      bool skip_isolated = false) {
    const int bits = loops ? n * (n + 1) / 2 : n * (n - 1) / 2;
    // Bit positions in row-major upper-triangle order.
    std::vector<std::vector<int>> slot(n, std::vector<int>(n, -1));
    {
        int b = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                if (i != j || loops) {
                    slot[i][j] = slot[j][i] = b++;
                }
    }
    std::vector<std::vector<int>> perms;
    if (dedup == Dedup::exact) {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        do {
            perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
    }
    std::vector<int> deg(n), loop(n);
    for (uint64_t mask = 0; mask < (1ull << bits); ++mask) {
        std::fill(deg.begin(), deg.end(), 0);
        std::fill(loop.begin(), loop.end(), 0);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) {
                if (slot[i][j] < 0 || !((mask >> slot[i][j]) & 1))
                    continue;
                if (i == j)
                    loop[i] = 1;
                else {
                    ++deg[i];
                    ++deg[j];
                }
            }
        if (skip_isolated) {
            bool isolated = false;
            for (int v = 0; v < n && !isolated; ++v)
                isolated = deg[v] == 0 && loop[v] == 0;
            if (isolated)
                continue;
        }
        if (dedup == Dedup::cheap) {
            bool sorted = true;
            for (int v = 0; v + 1 < n && sorted; ++v)
                sorted = std::make_pair(loop[v], deg[v]) >= std::make_pair(loop[v + 1], deg[v + 1]);
            if (!sorted)
                continue;
        } else if (dedup == Dedup::exact) {
            bool minimal = true;
            for (const auto& p : perms) {
                uint64_t pm = 0;
                for (int i = 0; i < n; ++i)
                    for (int j = i; j < n; ++j)
                        if (slot[i][j] >= 0 && ((mask >> slot[p[i]][p[j]]) & 1))
                            pm |= 1ull << slot[i][j];
                if (pm < mask) {
                    minimal = false;
                    break;
                }
            }
            if (!minimal)
                continue;
        }
        WeightedGraph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                if (slot[i][j] >= 0 && ((mask >> slot[i][j]) & 1))
                    g.set_weight(i, j, 1);
        if (connected_only && !is_connected(g))
            continue;
        fn(g);
    }
}

inline std::vector<WeightedGraph> enumerate_unweighted_graphs(int n, bool loops,
                                                              bool connected_only, Dedup dedup) {
    std::vector<WeightedGraph> out;
    for_each_unweighted_graph(n, loops, connected_only, dedup,
                              [&](const WeightedGraph& g) { out.push_back(g); });
    return out;
}

} // namespace homlor
