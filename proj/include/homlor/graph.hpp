#pragma once

#include <homlor/rational.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace homlor {

// Weighted graph with loops: a symmetric nonnegative rational matrix.
// Diagonal entries are loop weights. Immutable after construction in
// practice; mutators validate symmetry and nonnegativity.
class WeightedGraph {
public:
    explicit WeightedGraph(int n) : n_(n), w_(static_cast<size_t>(n) * n, Rat(0)) {
        if (n < 1)
            throw std::invalid_argument("graph needs at least one vertex");
    }

    static WeightedGraph from_matrix(const std::vector<std::vector<Rat>>& m) {
        const int n = static_cast<int>(m.size());
        WeightedGraph g(n);
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(m[i].size()) != n)
                throw std::invalid_argument("weight matrix is not square");
            for (int j = 0; j < n; ++j) {
                if (m[i][j] < 0)
                    throw std::invalid_argument("negative edge weight");
                if (m[i][j] != m[j][i])
                    throw std::invalid_argument("weight matrix is not symmetric");
                g.w_[static_cast<size_t>(i) * n + j] = m[i][j];
            }
        }
        return g;
    }

    int vertex_count() const { return n_; }

    const Rat& weight(int i, int j) const { return w_[idx(i, j)]; }

    void set_weight(int i, int j, const Rat& w) {
        if (w < 0)
            throw std::invalid_argument("negative edge weight");
        w_[idx(i, j)] = w;
        w_[idx(j, i)] = w;
    }

    bool has_edge(int i, int j) const { return weight(i, j) > 0; }
    bool has_loop(int i) const { return has_edge(i, i); }

    // Number of unordered edges with positive weight, loops counted once.
    int edge_count() const {
        int e = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i; j < n_; ++j)
                if (has_edge(i, j))
                    ++e;
        return e;
    }

    int degree(int v) const {
        int d = 0;
        for (int j = 0; j < n_; ++j)
            if (j != v && has_edge(v, j))
                ++d;
        return d;
    }

    bool is_unweighted() const {
        return std::all_of(w_.begin(), w_.end(),
                           [](const Rat& w) { return w == 0 || w == 1; });
    }

    bool has_isolated_vertex() const {
        for (int v = 0; v < n_; ++v) {
            bool touched = false;
            for (int j = 0; j < n_ && !touched; ++j)
                touched = has_edge(v, j);
            if (!touched)
                return true;
        }
        return false;
    }

    bool operator==(const WeightedGraph& o) const { return n_ == o.n_ && w_ == o.w_; }

private:
    size_t idx(int i, int j) const {
        if (i < 0 || i >= n_ || j < 0 || j >= n_)
            throw std::out_of_range("vertex index out of range");
        return static_cast<size_t>(i) * n_ + j;
    }

    int n_;
    std::vector<Rat> w_;
};

// A {0,1}-weighted graph with a designated ordered bipartition.
struct LabelledBipartiteGraph {
    WeightedGraph graph;
    std::vector<int> left;
    std::vector<int> right;

    LabelledBipartiteGraph(WeightedGraph g, std::vector<int> l, std::vector<int> r)
        : graph(std::move(g)), left(std::move(l)), right(std::move(r)) {
        validate();
    }

private:
    void validate() const {
        const int n = graph.vertex_count();
        std::vector<int> side(n, -1);
        for (int v : left) side.at(v) = 0;
        for (int v : right) {
            if (side.at(v) == 0)
                throw std::invalid_argument("bipartition sides overlap");
            side[v] = 1;
        }
        if (static_cast<int>(left.size() + right.size()) != n)
            throw std::invalid_argument("bipartition does not cover the vertex set");
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                if (graph.has_edge(i, j) && side[i] == side[j])
                    throw std::invalid_argument("edge inside one side of the bipartition");
        if (!graph.is_unweighted())
            throw std::invalid_argument("bipartite graph must be {0,1}-weighted");
    }
};

// ---- standard families ----

inline WeightedGraph make_complete(int q) {
    if (q < 1)
        throw std::invalid_argument("complete graph needs at least one vertex");
    WeightedGraph g(q);
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
            g.set_weight(i, j, 1);
    return g;
}

// Path with `len` edges (len + 1 vertices), vertices in path order.
inline WeightedGraph make_path(int len) {
    if (len < 0)
        throw std::invalid_argument("path length must be nonnegative");
    WeightedGraph g(len + 1);
    for (int i = 0; i < len; ++i)
        g.set_weight(i, i + 1, 1);
    return g;
}

inline WeightedGraph make_cycle(int len) {
    if (len < 3)
        throw std::invalid_argument("cycle length must be at least 3");
    WeightedGraph g(len);
    for (int i = 0; i < len; ++i)
        g.set_weight(i, (i + 1) % len, 1);
    return g;
}

// K(r_1,...,r_k): vertices grouped part by part, edges across parts only.
// Parts of size zero are permitted and simply contribute no vertices.
inline WeightedGraph make_complete_multipartite(const std::vector<int>& parts) {
    long total = 0;
    for (int r : parts) {
        if (r < 0)
            throw std::invalid_argument("part sizes must be nonnegative");
        total += r;
    }
    if (total < 1)
        throw std::invalid_argument("at least one part must be nonempty");
    WeightedGraph g(static_cast<int>(total));
    std::vector<int> part_of;
    for (size_t p = 0; p < parts.size(); ++p)
        part_of.insert(part_of.end(), parts[p], static_cast<int>(p));
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = i + 1; j < g.vertex_count(); ++j)
            if (part_of[i] != part_of[j])
                g.set_weight(i, j, 1);
    return g;
}

// Complete graph on q vertices with exactly one looped vertex (the last one).
inline WeightedGraph make_kq_circ(int q) {
    WeightedGraph g = make_complete(q);
    g.set_weight(q - 1, q - 1, 1);
    return g;
}

// Hard-core target: an edge with one looped endpoint (vertex 2 looped).
inline WeightedGraph make_hardcore() { return make_kq_circ(2); }

enum class GraphFamily { path_len, cycle_len, complete, complete_multipartite, k_q_circ, hardcore };

inline WeightedGraph make_family(GraphFamily kind, const std::vector<int>& params) {
    auto single = [&](const char* what) {
        if (params.size() != 1)
            throw std::invalid_argument(std::string(what) + " takes exactly one parameter");
        return params[0];
    };
    switch (kind) {
    case GraphFamily::path_len: return make_path(single("path_len"));
    case GraphFamily::cycle_len: return make_cycle(single("cycle_len"));
    case GraphFamily::complete: return make_complete(single("complete"));
    case GraphFamily::complete_multipartite: return make_complete_multipartite(params);
    case GraphFamily::k_q_circ: {
        const int q = single("k_q_circ");
        if (q < 1)
            throw std::invalid_argument("k_q_circ needs at least one vertex");
        return make_kq_circ(q);
    }
    case GraphFamily::hardcore:
        if (!params.empty())
            throw std::invalid_argument("hardcore takes no parameters");
        return make_hardcore();
    }
    throw std::invalid_argument("unknown graph family");
}

// ---- constructions ----

// Tensor product H x K2: vertex set V(H) x {1,2} in lexicographic order
// (v,1) before (v,2) blockwise, i.e. vertices 0..t-1 are the first copy.
// (i,1) ~ (j,2) iff ij in E(H); a loop at i yields the edge (i,1)(i,2).
inline LabelledBipartiteGraph tensor_with_k2(const WeightedGraph& h) {
    if (!h.is_unweighted())
        throw std::invalid_argument("tensor_with_k2 expects an unweighted graph");
    const int t = h.vertex_count();
    WeightedGraph g(2 * t);
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j)
            if (h.has_edge(i, j))
                g.set_weight(i, t + j, 1);
    std::vector<int> left(t), right(t);
    std::iota(left.begin(), left.end(), 0);
    std::iota(right.begin(), right.end(), t);
    return LabelledBipartiteGraph(std::move(g), std::move(left), std::move(right));
}

// Clone v_i into sizes[i] copies; weights between clone classes follow the
// base weights, and clones of a looped vertex form a complete graph with
// loops of the same weight. A size of zero deletes the vertex.
inline WeightedGraph blow_up(const WeightedGraph& g, const std::vector<int>& sizes) {
    const int n = g.vertex_count();
    if (static_cast<int>(sizes.size()) != n)
        throw std::invalid_argument("blow_up needs one size per vertex");
    long total = 0;
    for (int s : sizes) {
        if (s < 0)
            throw std::invalid_argument("blow-up sizes must be nonnegative");
        total += s;
    }
    if (total < 1)
        throw std::invalid_argument("blow-up must keep at least one vertex");
    std::vector<int> origin;
    for (int v = 0; v < n; ++v)
        origin.insert(origin.end(), sizes[v], v);
    WeightedGraph out(static_cast<int>(total));
    for (size_t i = 0; i < origin.size(); ++i)
        for (size_t j = i; j < origin.size(); ++j) {
            const int u = origin[i], v = origin[j];
            if (u != v)
                out.set_weight(static_cast<int>(i), static_cast<int>(j), g.weight(u, v));
            else if (g.has_loop(u))
                out.set_weight(static_cast<int>(i), static_cast<int>(j), g.weight(u, u));
        }
    return out;
}

// H-blow-up: replace vertex i of F by parts[i] and each F-edge by a
// complete bipartite join. Vertex order: part 0's vertices, then part 1's, ...
inline WeightedGraph h_blow_up(const WeightedGraph& f, const std::vector<WeightedGraph>& parts) {
    const int m = f.vertex_count();
    if (static_cast<int>(parts.size()) != m)
        throw std::invalid_argument("h_blow_up needs one part per vertex of F");
    if (!f.is_unweighted())
        throw std::invalid_argument("pattern graph F must be unweighted");
    std::vector<int> offset(m + 1, 0);
    for (int i = 0; i < m; ++i) {
        if (!parts[i].is_unweighted())
            throw std::invalid_argument("h_blow_up parts must be unweighted");
        offset[i + 1] = offset[i] + parts[i].vertex_count();
    }
    WeightedGraph out(offset[m]);
    for (int i = 0; i < m; ++i)
        for (int a = 0; a < parts[i].vertex_count(); ++a)
            for (int b = a; b < parts[i].vertex_count(); ++b)
                if (parts[i].has_edge(a, b))
                    out.set_weight(offset[i] + a, offset[i] + b, 1);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (f.has_edge(i, j))
                for (int a = 0; a < parts[i].vertex_count(); ++a)
                    for (int b = 0; b < parts[j].vertex_count(); ++b)
                        out.set_weight(offset[i] + a, offset[j] + b, 1);
    return out;
}

inline bool is_bipartite(const WeightedGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> colour(n, -1);
    for (int s = 0; s < n; ++s) {
        if (colour[s] != -1)
            continue;
        colour[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            if (g.has_loop(v))
                return false;
            for (int u = 0; u < n; ++u)
                if (u != v && g.has_edge(v, u)) {
                    if (colour[u] == -1) {
                        colour[u] = 1 - colour[v];
                        stack.push_back(u);
                    } else if (colour[u] == colour[v])
                        return false;
                }
        }
    }
    return true;
}

// The swapped graph H^U of two copies of the H-blow-up of F. Vertex order:
// copy 1 (part by part), then copy 2. For each v_j in U the two copies of
// H_j are rewired to H_j x K2 (cross edges only); all blown-up F-edges stay
// within each copy.
inline WeightedGraph swapped_graph(const WeightedGraph& f,
                                   const std::vector<WeightedGraph>& parts,
                                   const std::vector<int>& u_set) {
    const int m = f.vertex_count();
    if (static_cast<int>(parts.size()) != m)
        throw std::invalid_argument("swapped_graph needs one part per vertex of F");
    if (!is_bipartite(f))
        throw std::invalid_argument("pattern graph F must be bipartite");
    std::vector<bool> in_u(m, false);
    for (int v : u_set) {
        if (v < 0 || v >= m)
            throw std::invalid_argument("U must be a subset of V(F)");
        in_u[v] = true;
    }
    const WeightedGraph h = h_blow_up(f, parts);
    const int t = h.vertex_count();
    std::vector<int> offset(m + 1, 0);
    for (int i = 0; i < m; ++i)
        offset[i + 1] = offset[i] + parts[i].vertex_count();

    WeightedGraph out(2 * t);
    // Blown-up F-edges, within each copy.
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (f.has_edge(i, j))
                for (int a = offset[i]; a < offset[i + 1]; ++a)
                    for (int b = offset[j]; b < offset[j + 1]; ++b) {
                        out.set_weight(a, b, 1);
                        out.set_weight(t + a, t + b, 1);
                    }
    // Part internals: plain H_j + H_j off U, H_j x K2 on U.
    for (int j = 0; j < m; ++j) {
        const WeightedGraph& hj = parts[j];
        for (int a = 0; a < hj.vertex_count(); ++a)
            for (int b = 0; b < hj.vertex_count(); ++b)
                if (hj.has_edge(a, b)) {
                    if (in_u[j])
                        out.set_weight(offset[j] + a, t + offset[j] + b, 1);
                    else if (a <= b) {
                        out.set_weight(offset[j] + a, offset[j] + b, 1);
                        out.set_weight(t + offset[j] + a, t + offset[j] + b, 1);
                    }
                }
    }
    return out;
}

// Positivity pattern: edge iff weight > 0, loops preserved.
inline WeightedGraph support(const WeightedGraph& g) {
    WeightedGraph out(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = i; j < g.vertex_count(); ++j)
            if (g.has_edge(i, j))
                out.set_weight(i, j, 1);
    return out;
}

// Principal submatrix on S, original vertex order preserved.
inline WeightedGraph induced_subgraph(const WeightedGraph& g, std::vector<int> s) {
    if (s.empty())
        throw std::invalid_argument("induced_subgraph needs a nonempty vertex set");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument("duplicate vertex in subset");
    WeightedGraph out(static_cast<int>(s.size()));
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i; j < s.size(); ++j)
            out.set_weight(static_cast<int>(i), static_cast<int>(j), g.weight(s[i], s[j]));
    return out;
}

inline WeightedGraph disjoint_union(const WeightedGraph& a, const WeightedGraph& b) {
    const int na = a.vertex_count(), nb = b.vertex_count();
    WeightedGraph out(na + nb);
    for (int i = 0; i < na; ++i)
        for (int j = i; j < na; ++j)
            out.set_weight(i, j, a.weight(i, j));
    for (int i = 0; i < nb; ++i)
        for (int j = i; j < nb; ++j)
            out.set_weight(na + i, na + j, b.weight(i, j));
    return out;
}

inline bool is_connected(const WeightedGraph& g) {
    const int n = g.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < n; ++u)
            if (!seen[u] && u != v && g.has_edge(v, u)) {
                seen[u] = true;
                ++count;
                stack.push_back(u);
            }
    }
    return count == n;
}

} // namespace homlor
