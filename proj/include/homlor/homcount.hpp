#pragma once

#include <homlor/graph.hpp>
#include <homlor/poly.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace homlor {

namespace detail {

// Twin classes: vertices with identical neighbourhoods, no edge between
// them, and the same loop status are interchangeable (clone classes of a
// blow-up). Used to group the sum-out tail so twin runs share one factor.
inline std::vector<std::vector<int>> twin_classes(const WeightedGraph& h) {
    const int t = h.vertex_count();
    std::vector<std::vector<int>> classes;
    std::vector<int> cls(t, -1);
    for (int v = 0; v < t; ++v) {
        if (cls[v] != -1)
            continue;
        cls[v] = static_cast<int>(classes.size());
        classes.push_back({v});
        for (int u = v + 1; u < t; ++u) {
            if (cls[u] != -1 || h.has_edge(u, v) || h.has_loop(u) != h.has_loop(v))
                continue;
            bool same = true;
            for (int w = 0; w < t && same; ++w)
                if (w != u && w != v && h.has_edge(u, w) != h.has_edge(v, w))
                    same = false;
            if (same) {
                cls[u] = cls[v];
                classes[cls[v]].push_back(u);
            }
        }
    }
    return classes;
}

// Static enumeration order. A greedy maximal independent set (whole twin
// classes, biggest first) goes to the tail, where each vertex has all its
// neighbours earlier and is summed out instead of branched; the remaining
// vertex cover is ordered so each next vertex maximizes edges into already
// placed ones, for zero-weight pruning.
inline std::vector<int> enumeration_order(const WeightedGraph& h) {
    const int t = h.vertex_count();
    std::vector<std::vector<int>> classes = twin_classes(h);
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.size() > b.size(); });
    std::vector<bool> in_tail(t, false);
    std::vector<int> tail;
    for (const auto& c : classes) {
        // Classes are neighbourhood-uniform: one adjacency check suffices.
        bool clear = true;
        for (int u = 0; u < t && clear; ++u)
            if (in_tail[u] && h.has_edge(u, c.front()))
                clear = false;
        if (!clear)
            continue;
        for (int v : c) {
            in_tail[v] = true;
            tail.push_back(v);
        }
    }
    std::vector<int> order;
    std::vector<bool> placed(t, false);
    const int cover = t - static_cast<int>(tail.size());
    for (int step = 0; step < cover; ++step) {
        int best = -1, best_back = -1, best_deg = -1;
        for (int v = 0; v < t; ++v) {
            if (placed[v] || in_tail[v])
                continue;
            int back = 0;
            for (int u : order)
                if (u != v && h.has_edge(u, v))
                    ++back;
            const int deg = h.degree(v);
            if (back > best_back || (back == best_back && deg > best_deg)) {
                best = v;
                best_back = back;
                best_deg = deg;
            }
        }
        order.push_back(best);
        placed[best] = true;
    }
    order.insert(order.end(), tail.begin(), tail.end());
    return order;
}

struct HomPlan {
    std::vector<int> order;
    std::vector<std::vector<int>> back; // positions (not vertices) adjacent behind
    std::vector<bool> looped;
    // A position whose vertex has no neighbour later in the order can be
    // summed out (one multiplicative factor instead of a branch); with a
    // bipartite source ordered side-first this turns n^{2t} into n^t.
    std::vector<bool> summable;
};

inline HomPlan make_plan(const WeightedGraph& h) {
    HomPlan plan;
    plan.order = enumeration_order(h);
    const int t = h.vertex_count();
    plan.back.resize(t);
    plan.looped.resize(t);
    plan.summable.resize(t);
    for (int k = 0; k < t; ++k) {
        plan.looped[k] = h.has_loop(plan.order[k]);
        for (int j = 0; j < k; ++j)
            if (h.has_edge(plan.order[j], plan.order[k]))
                plan.back[k].push_back(j);
        plan.summable[k] = static_cast<int>(plan.back[k].size()) == h.degree(plan.order[k]);
    }
    return plan;
}

// Bitmask counting path for {0,1}-weighted targets with at most 64 vertices.
// `allowed[k]` restricts the image of the vertex at plan position k.
// Caller guarantees the count fits in 64 bits.
inline unsigned long long count_maps_bitmask(const HomPlan& plan,
                                             const std::vector<uint64_t>& adj,
                                             uint64_t loop_mask,
                                             const std::vector<uint64_t>& allowed) {
    const int t = static_cast<int>(plan.order.size());
    std::vector<int> image(t);
    unsigned long long total = 0;
    auto candidates = [&](int k) {
        uint64_t cand = allowed[k];
        if (plan.looped[k])
            cand &= loop_mask;
        for (int j : plan.back[k])
            cand &= adj[image[j]];
        return cand;
    };
    auto rec = [&](auto&& self, int k, unsigned long long mult) -> void {
        if (k == t) {
            total += mult;
            return;
        }
        uint64_t cand = candidates(k);
        if (plan.summable[k]) {
            const unsigned long long choices = std::popcount(cand);
            if (choices == 0)
                return;
            // Twin positions (same back set, loop flag, and allowed mask)
            // repeat the same factor.
            int next = k + 1;
            unsigned long long acc = choices;
            while (next < t && plan.summable[next] && plan.back[next] == plan.back[k] &&
                   plan.looped[next] == plan.looped[k] && allowed[next] == allowed[k]) {
                acc *= choices;
                ++next;
            }
            self(self, next, mult * acc);
            return;
        }
        while (cand != 0) {
            image[k] = std::countr_zero(cand);
            cand &= cand - 1;
            self(self, k + 1, mult);
        }
    };
    rec(rec, 0, 1);
    return total;
}

inline Rat hom_count_weighted(const HomPlan& plan, const WeightedGraph& g) {
    const int t = static_cast<int>(plan.order.size());
    const int n = g.vertex_count();
    Rat total = 0;
    std::vector<int> image(t);
    auto factor = [&](int k, int v) {
        Rat w = plan.looped[k] ? g.weight(v, v) : Rat(1);
        for (int j : plan.back[k]) {
            if (w == 0)
                break;
            w *= g.weight(image[j], v);
        }
        return w;
    };
    auto rec = [&](auto&& self, int k, const Rat& partial) -> void {
        if (k == t) {
            total += partial;
            return;
        }
        if (plan.summable[k]) {
            Rat s = 0;
            for (int v = 0; v < n; ++v)
                s += factor(k, v);
            if (s == 0)
                return;
            // Runs of twin positions (same back set and loop flag, e.g. a
            // blown-up clone class) share the factor; take one power.
            int next = k + 1;
            Rat acc = s;
            while (next < t && plan.summable[next] && plan.back[next] == plan.back[k] &&
                   plan.looped[next] == plan.looped[k]) {
                acc *= s;
                ++next;
            }
            self(self, next, partial * acc);
            return;
        }
        for (int v = 0; v < n; ++v) {
            const Rat w = factor(k, v);
            if (w == 0)
                continue;
            image[k] = v;
            self(self, k + 1, partial * w);
        }
    };
    rec(rec, 0, Rat(1));
    return total;
}

} // namespace detail

// Exact weighted homomorphism count: sum over all maps V(H) -> V(G) of the
// product of target weights over E(H), loops contributing once each.
inline Rat hom_count(const WeightedGraph& h, const WeightedGraph& g) {
    if (!h.is_unweighted())
        throw std::invalid_argument("hom_count requires an unweighted source graph");
    const detail::HomPlan plan = detail::make_plan(h);
    const int n = g.vertex_count();
    const int t = h.vertex_count();
    const bool fits = t * std::bit_width(static_cast<unsigned>(n)) <= 62;
    if (g.is_unweighted() && n <= 64 && fits) {
        std::vector<uint64_t> adj(n, 0);
        uint64_t loop_mask = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j)
                if (g.has_edge(i, j))
                    adj[i] |= 1ull << j;
            if (g.has_loop(i))
                loop_mask |= 1ull << i;
        }
        const uint64_t all = (n == 64) ? ~0ull : ((1ull << n) - 1);
        std::vector<uint64_t> allowed(t, all);
        return Rat(Int(static_cast<unsigned long>(
            detail::count_maps_bitmask(plan, adj, loop_mask, allowed))));
    }
    return detail::hom_count_weighted(plan, g);
}

// Count of maps left -> A, right -> B preserving the edges of Hb inside G.
// A and B need not be disjoint: G[A,B] is read as a fresh bipartite graph
// on disjoint copies of A and B.
inline Int bipartite_hom_count(const LabelledBipartiteGraph& hb, const WeightedGraph& g,
                               const std::vector<int>& a, const std::vector<int>& b) {
    if (!g.is_unweighted())
        throw std::invalid_argument("bipartite_hom_count requires an unweighted target");
    const int n = g.vertex_count();
    if (n > 64)
        throw std::invalid_argument("target too large for bipartite_hom_count");
    uint64_t mask_a = 0, mask_b = 0;
    for (int v : a) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("A is not a subset of V(G)");
        mask_a |= 1ull << v;
    }
    for (int v : b) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("B is not a subset of V(G)");
        mask_b |= 1ull << v;
    }
    std::vector<uint64_t> adj(n, 0);
    uint64_t loop_mask = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (g.has_edge(i, j))
                adj[i] |= 1ull << j;
        if (g.has_loop(i))
            loop_mask |= 1ull << i;
    }
    std::vector<int> side(hb.graph.vertex_count(), 0);
    for (int v : hb.right)
        side[v] = 1;
    const detail::HomPlan plan = detail::make_plan(hb.graph);
    std::vector<uint64_t> allowed(plan.order.size());
    for (size_t k = 0; k < plan.order.size(); ++k)
        allowed[k] = side[plan.order[k]] == 0 ? mask_a : mask_b;
    return Int(static_cast<unsigned long>(
        detail::count_maps_bitmask(plan, adj, loop_mask, allowed)));
}

// The G-chromatic function h_H(x;G): one variable per target vertex,
// homogeneous of degree v(H), coefficient of the monomial recording the
// multiset of images equal to the total edge weight of those maps.
inline SparsePolynomial g_chromatic_polynomial(const WeightedGraph& h, const WeightedGraph& g) {
    if (!h.is_unweighted())
        throw std::invalid_argument("g_chromatic_polynomial requires an unweighted source");
    const detail::HomPlan plan = detail::make_plan(h);
    const int t = h.vertex_count();
    const int n = g.vertex_count();
    SparsePolynomial poly(n);
    std::vector<int> image(t);
    ExponentVector exp(n, 0);
    // Every map keeps its own monomial, so nothing can be summed out here.
    auto rec = [&](auto&& self, int k, const Rat& partial) -> void {
        if (k == t) {
            poly.add_term(exp, partial);
            return;
        }
        for (int v = 0; v < n; ++v) {
            Rat w = partial;
            if (plan.looped[k])
                w *= g.weight(v, v);
            for (int j : plan.back[k]) {
                if (w == 0)
                    break;
                w *= g.weight(image[j], v);
            }
            if (w == 0)
                continue;
            image[k] = v;
            ++exp[v];
            self(self, k + 1, w);
            --exp[v];
        }
    };
    rec(rec, 0, Rat(1));
    return poly;
}

// G-volume V_H(x_1,...,x_t;G): one rational vector per source vertex.
// Vectors may carry negative entries; per-theorem hypotheses are on callers.
inline Rat g_volume(const WeightedGraph& h, const std::vector<std::vector<Rat>>& vectors,
                    const WeightedGraph& g) {
    if (!h.is_unweighted())
        throw std::invalid_argument("g_volume requires an unweighted source");
    const int t = h.vertex_count();
    const int n = g.vertex_count();
    if (static_cast<int>(vectors.size()) != t)
        throw std::invalid_argument("g_volume needs one vector per source vertex");
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != n)
            throw std::invalid_argument("g_volume vector length mismatch");
    const detail::HomPlan plan = detail::make_plan(h);
    Rat total = 0;
    std::vector<int> image(t);
    auto factor = [&](int k, int v) {
        Rat w = vectors[plan.order[k]][v];
        if (w != 0 && plan.looped[k])
            w *= g.weight(v, v);
        for (int j : plan.back[k]) {
            if (w == 0)
                break;
            w *= g.weight(image[j], v);
        }
        return w;
    };
    auto rec = [&](auto&& self, int k, const Rat& partial) -> void {
        if (k == t) {
            total += partial;
            return;
        }
        if (plan.summable[k]) {
            Rat s = 0;
            for (int v = 0; v < n; ++v)
                s += factor(k, v);
            if (s != 0)
                self(self, k + 1, partial * s);
            return;
        }
        for (int v = 0; v < n; ++v) {
            const Rat w = factor(k, v);
            if (w == 0)
                continue;
            image[k] = v;
            self(self, k + 1, partial * w);
        }
    };
    rec(rec, 0, Rat(1));
    return total;
}

} // namespace homlor
