#pragma once

#include <homlor/afm.hpp>
#include <homlor/graph.hpp>
#include <homlor/homcount.hpp>
#include <homlor/poly.hpp>
#include <homlor/verdict.hpp>

#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace homlor {

// Seeded source of small nonnegative rationals: numerators uniform in
// [0, 16], denominators in [1, 8]. mt19937_64 plus explicit modulo keeps
// the stream identical across platforms (uniform_int_distribution is not
// portable).
class RatSampler {
public:
    explicit RatSampler(uint64_t seed) : rng_(seed) {}

    Rat next_nonneg() { return make(rng_() % 17); }
    Rat next_positive() { return make(1 + rng_() % 16); }
    uint64_t next_index(uint64_t bound) { return rng_() % bound; }

    std::vector<Rat> next_vector(int n) {
        std::vector<Rat> v(n);
        for (auto& x : v)
            x = next_nonneg();
        return v;
    }

private:
    Rat make(uint64_t num) {
        Rat r(static_cast<long>(num), static_cast<long>(1 + rng_() % 8));
        r.canonicalize();
        return r;
    }

    std::mt19937_64 rng_;
};

namespace detail {

inline json rat_vector_json(const std::vector<Rat>& v) {
    json out = json::array();
    for (const auto& x : v)
        out.push_back(format_rational(x));
    return out;
}

} // namespace detail

// hom(H,G)^2 <= hom(H x K2, G).
inline Verdict check_bipartite_swapping(const WeightedGraph& h, const WeightedGraph& g) {
    const Rat lhs = hom_count(h, g);
    const Rat rhs = hom_count(tensor_with_k2(h).graph, g);
    json instance{{"H", graph_to_json(h)}, {"G", graph_to_json(g)}};
    return make_verdict("bipartite_swap", lhs * lhs, rhs, std::move(instance));
}

enum class CrossMode {
    exhaustive_subsets, // all (A, B) pairs of vertex subsets of G
    kq_reduced          // G = K_q; only nested 1 <= a <= b <= q up to symmetry
};

// hom(H,G[A]) hom(H,G[B]) <= hom_b(H x K2, G[A,B]) for subsets A, B.
inline std::vector<Verdict> check_cross_bipartite_swapping(const WeightedGraph& h,
                                                           const WeightedGraph& g,
                                                           CrossMode mode) {
    if (!h.is_unweighted() || !g.is_unweighted())
        throw std::invalid_argument("cross-bipartite swapping needs unweighted graphs");
    const int n = g.vertex_count();
    const LabelledBipartiteGraph hk2 = tensor_with_k2(h);
    std::vector<Verdict> out;
    if (mode == CrossMode::kq_reduced) {
        for (int i = 0; i < n; ++i) {
            if (g.has_loop(i))
                throw std::invalid_argument("kq_reduced mode requires G = K_q");
            for (int j = 0; j < n; ++j)
                if (i != j && !g.has_edge(i, j))
                    throw std::invalid_argument("kq_reduced mode requires G = K_q");
        }
        for (int a = 1; a <= n; ++a)
            for (int b = a; b <= n; ++b) {
                std::vector<int> sub_a(a), sub_b(b);
                std::iota(sub_a.begin(), sub_a.end(), 0);
                std::iota(sub_b.begin(), sub_b.end(), 0);
                const Rat lhs = hom_count(h, make_complete(a)) * hom_count(h, make_complete(b));
                const Rat rhs(bipartite_hom_count(hk2, g, sub_a, sub_b));
                json instance{{"H", graph_to_json(h)}, {"q", n}, {"a", a}, {"b", b}};
                out.push_back(
                    make_verdict("cross_bipartite_kq", lhs, rhs, std::move(instance)));
            }
        return out;
    }
    // Indicator vectors make hom(H, G[A]) a G-volume with all vectors 1_A,
    // so empty subsets fall out as zeroes rather than special cases.
    const int t = h.vertex_count();
    std::vector<std::vector<int>> subsets;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1)
                s.push_back(v);
        subsets.push_back(std::move(s));
    }
    auto indicator = [&](const std::vector<int>& s) {
        std::vector<Rat> v(n, Rat(0));
        for (int x : s)
            v[x] = 1;
        return v;
    };
    for (const auto& sa : subsets)
        for (const auto& sb : subsets) {
            const std::vector<std::vector<Rat>> va(t, indicator(sa));
            const std::vector<std::vector<Rat>> vb(t, indicator(sb));
            const Rat lhs = g_volume(h, va, g) * g_volume(h, vb, g);
            const Rat rhs(bipartite_hom_count(hk2, g, sa, sb));
            json instance{{"H", graph_to_json(h)},
                          {"G", graph_to_json(g)},
                          {"A", sa},
                          {"B", sb}};
            out.push_back(make_verdict("cross_bipartite", lhs, rhs, std::move(instance)));
        }
    return out;
}

// V_H(a,...,a;G) V_H(b,...,b;G) <= V_{H x K2}(a,...,a,b,...,b;G) on seeded
// random nonnegative rational vectors.
inline std::vector<Verdict> check_weighted_cross_bipartite(const WeightedGraph& h,
                                                           const WeightedGraph& g, int trials,
                                                           long seed) {
    const int t = h.vertex_count();
    const int n = g.vertex_count();
    const LabelledBipartiteGraph hk2 = tensor_with_k2(h);
    RatSampler sampler(static_cast<uint64_t>(seed));
    std::vector<Verdict> out;
    for (int trial = 0; trial < trials; ++trial) {
        const std::vector<Rat> a = sampler.next_vector(n);
        const std::vector<Rat> b = sampler.next_vector(n);
        const std::vector<std::vector<Rat>> va(t, a), vb(t, b);
        std::vector<std::vector<Rat>> both(va);
        both.insert(both.end(), vb.begin(), vb.end());
        const Rat lhs = g_volume(h, va, g) * g_volume(h, vb, g);
        const Rat rhs = g_volume(hk2.graph, both, g);
        json instance{{"H", graph_to_json(h)},
                      {"G", graph_to_json(g)},
                      {"trial", trial},
                      {"a", detail::rat_vector_json(a)},
                      {"b", detail::rat_vector_json(b)}};
        out.push_back(
            make_verdict("weighted_cross_bipartite", lhs, rhs, std::move(instance), seed));
    }
    return out;
}

// Alexandrov-Fenchel shape on the polarization of a Lorentzian f:
//   F(v1,v2,v3,...,vd)^2 >= F(v1,v1,v3,...)·F(v2,v2,v3,...).
// A >=-claim, so the Verdict stores lhs = product, rhs = square.
inline Verdict check_af_inequality(const SparsePolynomial& f,
                                   const std::vector<std::vector<Rat>>& vs,
                                   std::optional<long> seed = std::nullopt) {
    const int d = f.degree();
    if (static_cast<int>(vs.size()) != d)
        throw std::invalid_argument("check_af_inequality needs degree-many vectors");
    if (d < 2)
        throw std::invalid_argument("check_af_inequality needs degree >= 2");
    for (size_t i = 1; i < vs.size(); ++i)
        for (const Rat& x : vs[i])
            if (x < 0)
                throw std::invalid_argument("v2..vd must be nonnegative");
    const Rat f_mixed = mixed_form(f, vs);
    std::vector<std::vector<Rat>> rep1 = vs, rep2 = vs;
    rep1[1] = vs[0];
    rep2[0] = vs[1];
    const Rat lhs = mixed_form(f, rep1) * mixed_form(f, rep2);
    const Rat rhs = f_mixed * f_mixed;
    json vectors = json::array();
    for (const auto& v : vs)
        vectors.push_back(detail::rat_vector_json(v));
    json instance{{"f", polynomial_to_json(f)}, {"vectors", std::move(vectors)}};
    return make_verdict("af_inequality", lhs, rhs, std::move(instance), seed);
}

// V_{K_t}(b,a,...,a;G)·V_{K_t}(a,b,...,b;G) >= V_{K_t}(a,...;G)·V_{K_t}(b,...;G).
// A >=-claim, so the Verdict stores lhs = diagonal product, rhs = mixed.
inline Verdict check_corollary_product(const WeightedGraph& g, int t, const std::vector<Rat>& a,
                                       const std::vector<Rat>& b,
                                       std::optional<long> seed = std::nullopt) {
    if (t < 2)
        throw std::invalid_argument("check_corollary_product needs t >= 2");
    const int n = g.vertex_count();
    if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
        throw std::invalid_argument("vector length must equal v(G)");
    const WeightedGraph kt = make_complete(t);
    std::vector<std::vector<Rat>> all_a(t, a), all_b(t, b);
    std::vector<std::vector<Rat>> b_first(all_a), a_first(all_b);
    b_first[0] = b;
    a_first[0] = a;
    const Rat lhs = g_volume(kt, all_a, g) * g_volume(kt, all_b, g);
    const Rat rhs = g_volume(kt, b_first, g) * g_volume(kt, a_first, g);
    json instance{{"G", graph_to_json(g)},
                  {"t", t},
                  {"a", detail::rat_vector_json(a)},
                  {"b", detail::rat_vector_json(b)}};
    return make_verdict("corollary_product", lhs, rhs, std::move(instance), seed);
}

enum class AfmStrategy { structural, rejection };

// Seeded generator of antiferromagnetic graphs. The structural strategy
// blows up K_q or K_q° and rescales by a random positive diagonal, which
// preserves the eigenvalue signs (congruence); graphs are still re-verified
// exactly before being emitted. Rejection draws random symmetric matrices
// and filters, which is kept for cross-checking but rarely lands at n >= 4.
class AfmSampler {
public:
    AfmSampler(long seed, int n_max, AfmStrategy strategy = AfmStrategy::structural)
        : sampler_(static_cast<uint64_t>(seed)), n_max_(n_max), strategy_(strategy) {
        if (n_max < 1)
            throw std::invalid_argument("AfmSampler needs n_max >= 1");
    }

    WeightedGraph next() {
        for (int attempt = 0; attempt < 10000; ++attempt) {
            WeightedGraph g = strategy_ == AfmStrategy::structural ? draw_structural()
                                                                   : draw_rejection();
            if (is_antiferromagnetic(g).verdict)
                return g;
        }
        throw std::runtime_error("AfmSampler failed to produce an AFM graph");
    }

private:
    WeightedGraph draw_structural() {
        const int n = 1 + static_cast<int>(sampler_.next_index(n_max_));
        const int q = 1 + static_cast<int>(sampler_.next_index(n));
        const bool looped = sampler_.next_index(2) == 1;
        WeightedGraph base = looped ? make_kq_circ(q) : make_complete(q);
        // Random composition of n into q positive class sizes.
        std::vector<int> sizes(q, 1);
        for (int extra = 0; extra < n - q; ++extra)
            ++sizes[sampler_.next_index(q)];
        WeightedGraph g = blow_up(base, sizes);
        // w_ij -> d_i d_j w_ij with d_i > 0 keeps the signature.
        std::vector<Rat> d(n);
        for (auto& x : d)
            x = sampler_.next_positive();
        WeightedGraph scaled(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                scaled.set_weight(i, j, d[i] * d[j] * g.weight(i, j));
        return scaled;
    }

    WeightedGraph draw_rejection() {
        const int n = 1 + static_cast<int>(sampler_.next_index(n_max_));
        WeightedGraph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                g.set_weight(i, j, sampler_.next_nonneg());
        return g;
    }

    RatSampler sampler_;
    int n_max_;
    AfmStrategy strategy_;
};

} // namespace homlor
