#pragma once

#include <homlor/graph.hpp>
#include <homlor/rational.hpp>

#include <vector>

namespace homlor {

// Univariate polynomials over Rat: coeffs[i] is the coefficient of x^i,
// trimmed so the leading coefficient is nonzero (empty = zero polynomial).
using UniPoly = std::vector<Rat>;

inline void unipoly_trim(UniPoly& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

inline int unipoly_degree(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }

inline UniPoly unipoly_derivative(const UniPoly& p) {
    UniPoly d;
    for (size_t i = 1; i < p.size(); ++i)
        d.push_back(p[i] * static_cast<long>(i));
    unipoly_trim(d);
    return d;
}

inline UniPoly unipoly_rem(UniPoly a, const UniPoly& b) {
    while (unipoly_degree(a) >= unipoly_degree(b) && !a.empty()) {
        const Rat q = a.back() / b.back();
        const size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= q * b[i];
        unipoly_trim(a);
    }
    return a;
}

inline UniPoly unipoly_divide_exact(UniPoly a, const UniPoly& b) {
    UniPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
    while (unipoly_degree(a) >= unipoly_degree(b) && !a.empty()) {
        const Rat c = a.back() / b.back();
        const size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= c * b[i];
        unipoly_trim(a);
    }
    unipoly_trim(q);
    return q;
}

inline UniPoly unipoly_monic(UniPoly p) {
    if (!p.empty() && p.back() != 1) {
        const Rat lead = p.back();
        for (Rat& c : p)
            c /= lead;
    }
    return p;
}

inline UniPoly unipoly_gcd(UniPoly a, UniPoly b) {
    unipoly_trim(a);
    unipoly_trim(b);
    while (!b.empty()) {
        UniPoly r = unipoly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return unipoly_monic(std::move(a));
}

// Sturm chain count of roots of a square-free polynomial in (0, +inf).
inline int sturm_positive_roots_squarefree(UniPoly p) {
    unipoly_trim(p);
    // Remove the root at 0 if present; it is not a positive root.
    while (!p.empty() && p[0] == 0)
        p.erase(p.begin());
    if (unipoly_degree(p) < 1)
        return 0;
    std::vector<UniPoly> chain{p, unipoly_derivative(p)};
    while (!chain.back().empty() && unipoly_degree(chain.back()) >= 0) {
        UniPoly r = unipoly_rem(chain[chain.size() - 2], chain.back());
        if (r.empty())
            break;
        for (Rat& c : r)
            c = -c;
        chain.push_back(std::move(r));
    }
    auto variations = [&](auto sign_of) {
        int v = 0, prev = 0;
        for (const UniPoly& q : chain) {
            const int s = sign_of(q);
            if (s == 0)
                continue;
            if (prev != 0 && s != prev)
                ++v;
            prev = s;
        }
        return v;
    };
    const int at_zero = variations([](const UniPoly& q) { return q.empty() ? 0 : sgn(q[0]); });
    const int at_inf = variations([](const UniPoly& q) { return q.empty() ? 0 : sgn(q.back()); });
    return at_zero - at_inf;
}

// Positive real roots counted with multiplicity: peel square-free layers.
inline int count_positive_roots(UniPoly p) {
    unipoly_trim(p);
    int count = 0;
    while (unipoly_degree(p) >= 1) {
        const UniPoly g = unipoly_gcd(p, unipoly_derivative(p));
        count += sturm_positive_roots_squarefree(unipoly_divide_exact(p, g));
        p = g;
    }
    return count;
}

// Characteristic polynomial det(xI - A) of the weight matrix, exact.
// Faddeev-LeVerrier on an integer rescaling cA (c > 0); rescaling scales
// the eigenvalues by c and leaves the positive count unchanged, and the
// returned polynomial is that of cA.
inline UniPoly scaled_characteristic_polynomial(const WeightedGraph& g, Int& scale_out) {
    const int n = g.vertex_count();
    Int lcm = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), g.weight(i, j).get_den().get_mpz_t());
    scale_out = lcm;
    std::vector<Int> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat w = g.weight(i, j) * Rat(lcm);
            a[static_cast<size_t>(i) * n + j] = w.get_num();
        }
    // M_1 = A, c_k = -tr(A M_{k-1} ...)/k; all divisions are exact.
    std::vector<Int> m = a;
    UniPoly coeffs(n + 1, Rat(0));
    coeffs[n] = 1;
    for (int k = 1; k <= n; ++k) {
        Int tr = 0;
        for (int i = 0; i < n; ++i)
            tr += m[static_cast<size_t>(i) * n + i];
        Int ck;
        mpz_divexact_ui(ck.get_mpz_t(), tr.get_mpz_t(), static_cast<unsigned long>(k));
        ck = -ck;
        coeffs[n - k] = Rat(ck);
        if (k == n)
            break;
        for (int i = 0; i < n; ++i)
            m[static_cast<size_t>(i) * n + i] += ck;
        std::vector<Int> next(static_cast<size_t>(n) * n, Int(0));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                const Int& ail = a[static_cast<size_t>(i) * n + l];
                if (ail == 0)
                    continue;
                for (int j = 0; j < n; ++j)
                    next[static_cast<size_t>(i) * n + j] += ail * m[static_cast<size_t>(l) * n + j];
            }
        m = std::move(next);
    }
    return coeffs;
}

// Exact count of positive eigenvalues (with multiplicity) of the symmetric
// weight matrix. This is the signature routine every verdict relies on.
inline int positive_eigenvalue_count(const WeightedGraph& g) {
    Int scale;
    return count_positive_roots(scaled_characteristic_polynomial(g, scale));
}

} // namespace homlor
