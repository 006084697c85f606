#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <homlor/homcount.hpp>
#include <homlor/verify.hpp>

#include <algorithm>

using namespace homlor;

namespace {

WeightedGraph g0() {
    return WeightedGraph::from_matrix({{Rat(0), Rat(0), Rat(1)},
                                       {Rat(0), Rat(0), Rat(2)},
                                       {Rat(1), Rat(2), Rat(0)}});
}

// Reference counter with no pruning or ordering tricks: iterate all
// v(G)^{v(H)} maps directly.
Rat hom_reference(const WeightedGraph& h, const WeightedGraph& g) {
    const int t = h.vertex_count(), n = g.vertex_count();
    std::vector<int> phi(t, 0);
    Rat total = 0;
    while (true) {
        Rat w = 1;
        for (int i = 0; i < t && w != 0; ++i)
            for (int j = i; j < t && w != 0; ++j)
                if (h.has_edge(i, j))
                    w *= g.weight(phi[i], phi[j]);
        total += w;
        int k = t - 1;
        while (k >= 0 && ++phi[k] == n) {
            phi[k] = 0;
            --k;
        }
        if (k < 0)
            return total;
    }
}

WeightedGraph relabel(const WeightedGraph& g, const std::vector<int>& perm) {
    WeightedGraph out(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = i; j < g.vertex_count(); ++j)
            out.set_weight(perm[i], perm[j], g.weight(i, j));
    return out;
}

} // namespace

TEST_CASE("hom counts on the paper's examples") {
    CHECK(hom_count(make_complete(3), make_complete(3)) == 6);
    CHECK(hom_count(make_cycle(6), make_complete(3)) == 66);
    CHECK(hom_count(make_complete(2), g0()) == 6);
    CHECK_THROWS(hom_count(g0(), make_complete(3))); // weighted source rejected
}

TEST_CASE("hom counts agree with the unpruned reference") {
    const std::vector<WeightedGraph> sources{make_complete(3), make_path(3), make_cycle(4),
                                             make_kq_circ(2),  WeightedGraph(2),
                                             make_complete_multipartite({2, 1})};
    const std::vector<WeightedGraph> targets{make_complete(4), g0(), make_kq_circ(3),
                                             WeightedGraph(3)};
    for (const auto& h : sources)
        for (const auto& g : targets)
            CHECK(hom_count(h, g) == hom_reference(h, g));
    // Edgeless sources degenerate to n^{v(H)}.
    CHECK(hom_count(WeightedGraph(3), make_complete(4)) == 64);
}

TEST_CASE("hom count invariances") {
    const WeightedGraph h = make_path(3);
    CHECK(hom_count(relabel(h, {3, 1, 0, 2}), make_complete(3)) ==
          hom_count(h, make_complete(3)));
    CHECK(hom_count(h, relabel(g0(), {2, 0, 1})) == hom_count(h, g0()));
}

TEST_CASE("bipartite hom counts") {
    const auto k2k2 = tensor_with_k2(make_complete(2));
    CHECK(bipartite_hom_count(k2k2, make_complete(3), {0, 1}, {0, 1, 2}) == 16);

    const auto k3k2 = tensor_with_k2(make_complete(3));
    CHECK(bipartite_hom_count(k3k2, make_complete(3), {0, 1, 2}, {0, 1, 2}) == 66);

    // Disjoint A, B with no cross edges kill any connected H with an edge.
    const WeightedGraph two_k2 = disjoint_union(make_complete(2), make_complete(2));
    CHECK(bipartite_hom_count(k2k2, two_k2, {0, 1}, {2, 3}) == 0);

    CHECK_THROWS(bipartite_hom_count(k2k2, make_complete(3), {7}, {0}));
    CHECK_THROWS(bipartite_hom_count(k2k2, g0(), {0}, {1}));
}

TEST_CASE("G-chromatic polynomials") {
    const SparsePolynomial hk2 = g_chromatic_polynomial(make_complete(2), make_complete(2));
    SparsePolynomial expected(2);
    expected.add_term({1, 1}, 2);
    CHECK(hk2 == expected);

    const SparsePolynomial single = g_chromatic_polynomial(make_complete(1), g0());
    SparsePolynomial sum(3);
    for (int i = 0; i < 3; ++i) {
        ExponentVector e(3, 0);
        e[i] = 1;
        sum.add_term(e, 1);
    }
    CHECK(single == sum);

    const SparsePolynomial hg0 = g_chromatic_polynomial(make_complete(2), g0());
    SparsePolynomial eg0(3);
    eg0.add_term({1, 0, 1}, 2);
    eg0.add_term({0, 1, 1}, 4);
    CHECK(hg0 == eg0);

    // Homogeneity, nonnegativity, and the all-ones evaluation.
    for (const auto& h : {make_path(3), make_cycle(5), make_complete(3)})
        for (const auto& g : {make_complete(4), g0()}) {
            const SparsePolynomial p = g_chromatic_polynomial(h, g);
            CHECK(p.is_homogeneous());
            // Odd cycles and triangles have no homs into the bipartite-shaped
            // weighted target, leaving the zero polynomial (degree -1).
            if (!p.is_zero())
                CHECK(p.degree() == h.vertex_count());
            CHECK(p.has_nonnegative_coefficients());
            CHECK(p.evaluate(std::vector<Rat>(g.vertex_count(), Rat(1))) == hom_count(h, g));
        }
}

TEST_CASE("G-volumes") {
    const WeightedGraph k3 = make_complete(3);
    std::vector<Rat> e0{Rat(1), Rat(0), Rat(0)}, e1{Rat(0), Rat(1), Rat(0)},
        ones{Rat(1), Rat(1), Rat(1)};
    CHECK(g_volume(make_complete(2), {e0, e1}, k3) == 1);
    CHECK(g_volume(k3, {ones, ones, ones}, k3) == 6);
    CHECK(g_volume(make_complete(2), {{Rat(1), Rat(1), Rat(0)}, ones}, k3) == 4);

    // All-equal vectors reproduce the polynomial evaluation.
    RatSampler sampler(21);
    for (const auto& h : {make_path(2), make_cycle(4)}) {
        const std::vector<Rat> x = sampler.next_vector(3);
        const std::vector<std::vector<Rat>> xs(h.vertex_count(), x);
        CHECK(g_volume(h, xs, g0()) == g_chromatic_polynomial(h, g0()).evaluate(x));
    }

    // Indicator vectors recover bipartite counts.
    const auto hk2 = tensor_with_k2(make_path(2));
    std::vector<int> a{0, 1}, b{1, 2};
    std::vector<Rat> ia(3, Rat(0)), ib(3, Rat(0));
    for (int v : a)
        ia[v] = 1;
    for (int v : b)
        ib[v] = 1;
    std::vector<std::vector<Rat>> vecs(3, ia);
    vecs.insert(vecs.end(), 3, ib);
    CHECK(Rat(bipartite_hom_count(hk2, k3, a, b)) == g_volume(hk2.graph, vecs, k3));

    CHECK_THROWS(g_volume(k3, {ones, ones}, k3));
    CHECK_THROWS(g_volume(k3, {ones, ones, {Rat(1)}}, k3));
}

TEST_CASE("volume order sensitivity and negative entries") {
    // For non-complete H the G-volume need not be symmetric in its vectors.
    const WeightedGraph p2 = make_path(2);
    std::vector<Rat> u{Rat(1), Rat(0), Rat(0)}, v{Rat(0), Rat(1), Rat(2)},
        w{Rat(1), Rat(1), Rat(0)};
    const Rat a = g_volume(p2, {u, v, w}, g0());
    const Rat b = g_volume(p2, {v, u, w}, g0());
    CHECK(a != b);

    // One arbitrary-sign vector is legal (callers police hypotheses).
    std::vector<Rat> neg{Rat(-1), Rat(1), Rat(0)};
    CHECK_NOTHROW(g_volume(p2, {neg, v, w}, g0()));
}

TEST_CASE("squared identity for bipartite sources") {
    for (const auto& h : {make_complete(2), make_path(3), make_cycle(4),
                          make_complete_multipartite({2, 2})})
        for (const auto& g : {make_complete(3), g0(), make_kq_circ(3)}) {
            const Rat hom = hom_count(h, g);
            CHECK(hom_count(tensor_with_k2(h).graph, g) == hom * hom);
        }
}

TEST_CASE("swapped-graph chain is monotone") {
    // hom(H^U, K_q) <= hom(H^{U+u}, K_q) along any chain of U's.
    const WeightedGraph f = make_path(1); // an edge
    const std::vector<std::vector<WeightedGraph>> part_choices{
        {make_complete(2), make_complete(2)},
        {make_complete(1), make_complete(3)},
        {make_complete(2), make_complete(3)}};
    for (const auto& parts : part_choices)
        for (int q = 2; q <= 3; ++q) {
            const WeightedGraph kq = make_complete(q);
            const Rat h0 = hom_count(swapped_graph(f, parts, {}), kq);
            const Rat h1 = hom_count(swapped_graph(f, parts, {0}), kq);
            const Rat h2 = hom_count(swapped_graph(f, parts, {0, 1}), kq);
            CHECK(h0 <= h1);
            CHECK(h1 <= h2);
        }
}
