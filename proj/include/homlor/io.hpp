#pragma once

#include <homlor/graph.hpp>
#include <homlor/poly.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace homlor {

using json = nlohmann::json;

// ---- weighted-graph JSON: {"n": int, "weights": [[...]], "loops": [ints]?} ----

inline Rat rational_from_json(const json& j) {
    if (j.is_number_integer())
        return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    throw std::invalid_argument("rational entries must be integers or \"p/q\" strings");
}

inline WeightedGraph graph_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("weights"))
        throw std::invalid_argument("graph JSON needs \"n\" and \"weights\"");
    const int n = j.at("n").get<int>();
    const auto& rows = j.at("weights");
    if (static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("weights row count does not match n");
    std::vector<std::vector<Rat>> m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw std::invalid_argument("weights matrix is not square");
        for (const auto& cell : rows[i])
            m[i].push_back(rational_from_json(cell));
    }
    WeightedGraph g = WeightedGraph::from_matrix(m);
    if (j.contains("loops"))
        for (int v : j.at("loops").get<std::vector<int>>())
            g.set_weight(v, v, 1);
    return g;
}

inline json graph_to_json(const WeightedGraph& g) {
    json rows = json::array();
    for (int i = 0; i < g.vertex_count(); ++i) {
        json row = json::array();
        for (int j = 0; j < g.vertex_count(); ++j)
            row.push_back(format_rational(g.weight(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"n", g.vertex_count()}, {"weights", std::move(rows)}};
}

// ---- polynomial JSON: {"n_vars": int, "terms": [{"exp": [...], "coef": "p/q"}]} ----

inline SparsePolynomial polynomial_from_json(const json& j) {
    SparsePolynomial p(j.at("n_vars").get<int>());
    for (const auto& term : j.at("terms"))
        p.add_term(term.at("exp").get<ExponentVector>(), rational_from_json(term.at("coef")));
    return p;
}

inline json polynomial_to_json(const SparsePolynomial& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(json{{"exp", e}, {"coef", format_rational(c)}});
    return json{{"n_vars", p.n_vars()}, {"terms", std::move(terms)}};
}

// ---- graph6 (unweighted, loopless) ----

inline WeightedGraph graph_from_graph6(std::string line) {
    if (line.rfind(">>graph6<<", 0) == 0)
        line = line.substr(10);
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.pop_back();
    if (line.empty())
        throw std::invalid_argument("empty graph6 line");
    size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= line.size())
            throw std::invalid_argument("truncated graph6 line");
        const int c = static_cast<unsigned char>(line[pos++]) - 63;
        if (c < 0 || c > 63)
            throw std::invalid_argument("invalid graph6 character");
        return c;
    };
    long n;
    int c0 = next();
    if (c0 < 63) {
        n = c0;
    } else {
        int c1 = next();
        if (c1 < 63)
            n = (static_cast<long>(c1) << 12) | (next() << 6) | next();
        else
            n = (static_cast<long>(next()) << 30) | (static_cast<long>(next()) << 24) |
                (next() << 18) | (next() << 12) | (next() << 6) | next();
    }
    if (n < 1 || n > 512)
        throw std::invalid_argument("graph6 vertex count out of supported range");
    WeightedGraph g(static_cast<int>(n));
    int bits = 0, buf = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (bits == 0) {
                buf = next();
                bits = 6;
            }
            --bits;
            if ((buf >> bits) & 1)
                g.set_weight(i, j, 1);
        }
    return g;
}

inline std::string graph_to_graph6(const WeightedGraph& g) {
    if (!g.is_unweighted())
        throw std::invalid_argument("graph6 supports unweighted graphs only");
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v)
        if (g.has_loop(v))
            throw std::invalid_argument("graph6 supports loopless graphs only");
    if (n > 62)
        throw std::invalid_argument("graph6 writer supports up to 62 vertices");
    std::string out(1, static_cast<char>(n + 63));
    int bits = 6, buf = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            --bits;
            if (g.has_edge(i, j))
                buf |= 1 << bits;
            if (bits == 0) {
                out.push_back(static_cast<char>(buf + 63));
                bits = 6;
                buf = 0;
            }
        }
    if (bits < 6)
        out.push_back(static_cast<char>(buf + 63));
    return out;
}

// ---- CLI graph arguments: inline literals or file paths ----
// Literals: path:3, cycle:6, kq:4, kq_circ:3, multipartite:2,1,1, hardcore.

inline bool is_graph_literal(const std::string& arg) {
    return arg == "hardcore" || arg.rfind("path:", 0) == 0 || arg.rfind("cycle:", 0) == 0 ||
           arg.rfind("kq:", 0) == 0 || arg.rfind("kq_circ:", 0) == 0 ||
           arg.rfind("multipartite:", 0) == 0;
}

inline WeightedGraph graph_from_literal(const std::string& arg) {
    auto ints_after = [&](size_t colon) {
        std::vector<int> params;
        std::stringstream ss(arg.substr(colon + 1));
        std::string tok;
        while (std::getline(ss, tok, ','))
            params.push_back(std::stoi(tok));
        return params;
    };
    if (arg == "hardcore")
        return make_hardcore();
    const size_t colon = arg.find(':');
    const std::string head = arg.substr(0, colon);
    const std::vector<int> params = ints_after(colon);
    if (head == "path")
        return make_family(GraphFamily::path_len, params);
    if (head == "cycle")
        return make_family(GraphFamily::cycle_len, params);
    if (head == "kq")
        return make_family(GraphFamily::complete, params);
    if (head == "kq_circ")
        return make_family(GraphFamily::k_q_circ, params);
    if (head == "multipartite")
        return make_family(GraphFamily::complete_multipartite, params);
    throw std::invalid_argument("unknown graph literal: " + arg);
}

inline WeightedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    if (path.size() >= 3 && path.substr(path.size() - 3) == ".g6") {
        std::string line;
        if (!std::getline(in, line))
            throw std::runtime_error("empty graph6 file " + path);
        return graph_from_graph6(line);
    }
    json j;
    in >> j;
    return graph_from_json(j);
}

// "-" is handled by callers (stdin graph6 stream); literals and files here.
inline WeightedGraph resolve_graph_arg(const std::string& arg) {
    if (is_graph_literal(arg))
        return graph_from_literal(arg);
    return load_graph_file(arg);
}

} // namespace homlor
