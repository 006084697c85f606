#pragma once

#include <homlor/graph.hpp>
#include <homlor/linalg.hpp>

#include <optional>
#include <vector>

namespace homlor {

// Decomposition of an unweighted antiferromagnetic graph: the non-looped
// vertices split into multipartite classes (mutually non-adjacent within a
// class, fully adjacent across), and the looped vertices are apexes joined
// to everything.
struct StructuralDecomposition {
    std::vector<std::vector<int>> multipartite_classes;
    std::vector<int> looped_apexes;
};

struct AfmCertificate {
    bool verdict = false;
    int positive_eigenvalue_count = 0;
    std::optional<StructuralDecomposition> structural_decomposition;
};

// Purely structural test: does the graph split as in the decomposition?
// Independent of the spectral route by construction.
inline std::optional<StructuralDecomposition>
find_structural_decomposition(const WeightedGraph& g) {
    if (!g.is_unweighted() || g.has_isolated_vertex())
        return std::nullopt;
    const int n = g.vertex_count();
    StructuralDecomposition d;
    std::vector<int> plain;
    for (int v = 0; v < n; ++v) {
        if (g.has_loop(v))
            d.looped_apexes.push_back(v);
        else
            plain.push_back(v);
    }
    for (int v : d.looped_apexes)
        for (int u = 0; u < n; ++u)
            if (u != v && !g.has_edge(u, v))
                return std::nullopt;
    // Non-adjacency on the plain vertices must be an equivalence relation.
    std::vector<int> cls(n, -1);
    for (int v : plain) {
        if (cls[v] != -1)
            continue;
        const int c = static_cast<int>(d.multipartite_classes.size());
        d.multipartite_classes.emplace_back();
        for (int u : plain)
            if (u == v || !g.has_edge(u, v)) {
                if (cls[u] != -1)
                    return std::nullopt;
                cls[u] = c;
                d.multipartite_classes.back().push_back(u);
            }
    }
    for (int v : plain)
        for (int u : plain)
            if (u != v && g.has_edge(u, v) == (cls[u] == cls[v]))
                return std::nullopt;
    return d;
}

// Rebuild the graph a decomposition describes, on the same vertex count.
inline WeightedGraph reassemble(const StructuralDecomposition& d, int n) {
    WeightedGraph g(n);
    std::vector<int> cls(n, -1);
    for (size_t c = 0; c < d.multipartite_classes.size(); ++c)
        for (int v : d.multipartite_classes[c])
            cls[v] = static_cast<int>(c);
    for (int v = 0; v < n; ++v)
        for (int u = v + 1; u < n; ++u)
            if (cls[v] == -1 || cls[u] == -1 || cls[v] != cls[u])
                g.set_weight(v, u, 1);
    for (int v : d.looped_apexes)
        g.set_weight(v, v, 1);
    return g;
}

// Exact verdict: at most one positive eigenvalue, counting multiplicities.
// For unweighted graphs without isolated vertices, a true verdict also
// carries the structural decomposition.
inline AfmCertificate is_antiferromagnetic(const WeightedGraph& g) {
    AfmCertificate cert;
    cert.positive_eigenvalue_count = positive_eigenvalue_count(g);
    cert.verdict = cert.positive_eigenvalue_count <= 1;
    if (cert.verdict && g.is_unweighted() && !g.has_isolated_vertex())
        cert.structural_decomposition = find_structural_decomposition(g);
    return cert;
}

} // namespace homlor
