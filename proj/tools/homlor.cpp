// homlor: exact homomorphism counting, antiferromagnetic/Lorentzian
// certification, inequality verification, and counterexample search.

#include <CLI11.hpp>

#include <homlor/afm.hpp>
#include <homlor/formulas.hpp>
#include <homlor/homcount.hpp>
#include <homlor/io.hpp>
#include <homlor/lorentzian.hpp>
#include <homlor/search.hpp>
#include <homlor/verify.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace homlor;

constexpr int exit_ok = 0, exit_fail = 1, exit_error = 2;

WeightedGraph resolve_graph(const std::string& arg) {
    if (arg == "-") {
        std::string line;
        if (!std::getline(std::cin, line))
            throw std::runtime_error("no graph6 line on standard input");
        return graph_from_graph6(line);
    }
    return resolve_graph_arg(arg);
}

int default_threads() {
    if (const char* env = std::getenv("HOMLOR_THREADS")) {
        const int t = std::atoi(env);
        if (t > 0)
            return t;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

// "2..4" or a single "3".
std::pair<int, int> parse_range(const std::string& s) {
    const size_t dots = s.find("..");
    if (dots == std::string::npos) {
        const int q = std::stoi(s);
        return {q, q};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        out.push_back(std::stoi(tok));
    return out;
}

// Owns either std::cout or a file stream chosen by --out.
struct OutSink {
    explicit OutSink(const std::string& path) {
        if (path.empty())
            return;
        file = std::make_unique<std::ofstream>(path);
        if (!*file)
            throw std::runtime_error("cannot open output file " + path);
    }
    std::ostream& stream() { return file ? *file : std::cout; }
    std::unique_ptr<std::ofstream> file;
};

int emit_verdicts(const std::vector<Verdict>& verdicts, const std::string& out_path) {
    OutSink sink(out_path);
    bool all_hold = true;
    for (const Verdict& v : verdicts) {
        sink.stream() << verdict_to_json(v).dump() << "\n";
        all_hold = all_hold && v.holds;
    }
    return all_hold ? exit_ok : exit_fail;
}

json decomposition_to_json(const StructuralDecomposition& d) {
    return json{{"multipartite_classes", d.multipartite_classes},
                {"looped_apexes", d.looped_apexes}};
}

json lorentzian_to_json(const LorentzianCertificate& cert) {
    json j{{"verdict", cert.verdict}};
    if (cert.failure_witness) {
        json f{{"derivative_path", cert.failure_witness->derivative_path}};
        if (cert.failure_witness->m_convex_violation) {
            const auto& mv = *cert.failure_witness->m_convex_violation;
            f["m_convex_violation"] = json{{"a", mv.a}, {"b", mv.b}, {"i", mv.i}};
        }
        if (cert.failure_witness->hessian_positive_count)
            f["hessian_positive_count"] = *cert.failure_witness->hessian_positive_count;
        j["failure"] = std::move(f);
    }
    return j;
}

// ---- subcommand bodies; each returns a process exit code ----

int run_hom(const std::string& h_arg, const std::string& g_arg) {
    const WeightedGraph h = resolve_graph(h_arg);
    const WeightedGraph g = resolve_graph(g_arg);
    std::cout << json{{"hom", format_rational(hom_count(h, g))}}.dump() << "\n";
    return exit_ok;
}

int run_certify_afm(const std::string& g_arg) {
    const AfmCertificate cert = is_antiferromagnetic(resolve_graph(g_arg));
    json j{{"verdict", cert.verdict},
           {"positive_eigenvalue_count", cert.positive_eigenvalue_count}};
    if (cert.structural_decomposition)
        j["structural_decomposition"] = decomposition_to_json(*cert.structural_decomposition);
    std::cout << j.dump() << "\n";
    return cert.verdict ? exit_ok : exit_fail;
}

int run_certify_lorentzian(const std::vector<std::string>& chromatic,
                           const std::string& poly_path) {
    SparsePolynomial f(1);
    if (!chromatic.empty()) {
        const WeightedGraph h = resolve_graph(chromatic[0]);
        const WeightedGraph g = resolve_graph(chromatic[1]);
        f = g_chromatic_polynomial(h, g);
    } else if (!poly_path.empty()) {
        std::ifstream in(poly_path);
        if (!in)
            throw std::runtime_error("cannot open " + poly_path);
        json j;
        in >> j;
        f = polynomial_from_json(j);
    } else {
        throw std::runtime_error("certify lorentzian needs --chromatic H G or --poly FILE");
    }
    const LorentzianCertificate cert = is_lorentzian(f);
    std::cout << lorentzian_to_json(cert).dump() << "\n";
    return cert.verdict ? exit_ok : exit_fail;
}

int run_search(SearchOptions opt, const std::string& out_path, const std::string& resume_path) {
    if (!resume_path.empty()) {
        std::ifstream in(resume_path);
        if (in) {
            json j;
            in >> j;
            const auto [cursor, seed] = checkpoint_from_json(j);
            opt.cursor = cursor;
            opt.seed = seed;
        }
    }
    OutSink sink(out_path);
    const SearchResult res = search_counterexamples(
        opt, [&](const Verdict& v) { sink.stream() << verdict_to_json(v).dump() << "\n"; },
        &std::cerr);
    if (!resume_path.empty()) {
        std::ofstream out(resume_path);
        out << checkpoint_to_json(res.cursor, opt.seed).dump() << "\n";
    }
    std::cerr << "checked " << res.checked << " instance(s), " << res.failures
              << " failure(s)" << (res.exhausted ? ", exhausted" : "") << "\n";
    return res.failures == 0 ? exit_ok : exit_fail;
}

std::vector<WeightedGraph> family_graphs(const std::string& family) {
    std::vector<WeightedGraph> hs;
    if (family == "paths") {
        for (int len = 1; len <= 7; ++len)
            hs.push_back(make_path(len));
    } else if (family == "cycles") {
        for (int len = 4; len <= 8; len += 2)
            hs.push_back(make_cycle(len));
    } else if (family == "multipartite") {
        for (int r1 = 1; r1 <= 3; ++r1)
            for (int r2 = r1; r2 <= 3; ++r2) {
                hs.push_back(make_complete_multipartite({r1, r2}));
                for (int r3 = r2; r3 <= 3; ++r3)
                    if (r1 + r2 + r3 <= 6)
                        hs.push_back(make_complete_multipartite({r1, r2, r3}));
            }
    } else {
        throw std::runtime_error("unknown family: " + family +
                                 " (expected paths, cycles, or multipartite)");
    }
    return hs;
}

// Brute-force oracle counterparts of the closed-form counts.
Int oracle_two_sided(const WeightedGraph& path_or_cycle, const std::vector<int>& a_side,
                     const std::vector<int>& b_side, long a, long b) {
    LabelledBipartiteGraph hb(path_or_cycle, a_side, b_side);
    const WeightedGraph kb = make_complete(static_cast<int>(b));
    std::vector<int> sub_a(a), sub_b(b);
    std::iota(sub_a.begin(), sub_a.end(), 0);
    std::iota(sub_b.begin(), sub_b.end(), 0);
    return bipartite_hom_count(hb, kb, sub_a, sub_b);
}

int run_formulas(const std::string& which, int d, long a, long b, const std::string& side,
                 const std::string& parts_str, int s1, bool oracle) {
    Int value;
    std::optional<Int> oracle_value;
    auto evens_odds = [](int n) {
        std::vector<int> evens, odds;
        for (int v = 0; v < n; ++v)
            (v % 2 == 0 ? evens : odds).push_back(v);
        return std::make_pair(evens, odds);
    };
    if (which == "path-odd") {
        value = n_path_odd(d, a, b);
        if (oracle) {
            auto [evens, odds] = evens_odds(2 * d);
            oracle_value = oracle_two_sided(make_path(2 * d - 1), evens, odds, a, b);
        }
    } else if (which == "path-even") {
        const EvenPathSide s = side == "ba" ? EvenPathSide::ba : EvenPathSide::ab;
        value = n_path_even(d, a, b, s);
        if (oracle) {
            auto [evens, odds] = evens_odds(2 * d + 1);
            oracle_value = s == EvenPathSide::ab
                               ? oracle_two_sided(make_path(2 * d), evens, odds, a, b)
                               : oracle_two_sided(make_path(2 * d), odds, evens, a, b);
        }
    } else if (which == "cycle") {
        value = n_cycle(d, a, b);
        if (oracle) {
            auto [evens, odds] = evens_odds(2 * d);
            oracle_value = oracle_two_sided(make_cycle(2 * d), evens, odds, a, b);
        }
    } else if (which == "multipartite") {
        const std::vector<int> parts = parse_int_list(parts_str);
        value = n_multipartite(parts, a);
        if (oracle) {
            const Rat h = hom_count(make_complete_multipartite(parts),
                                    make_complete(static_cast<int>(a)));
            oracle_value = h.get_num();
        }
    } else if (which == "multipartite-first") {
        const std::vector<int> parts = parse_int_list(parts_str);
        value = n_multipartite_first_part(s1, parts, a, b);
        if (oracle) {
            std::vector<int> all_parts{s1};
            all_parts.insert(all_parts.end(), parts.begin(), parts.end());
            const WeightedGraph h = make_complete_multipartite(all_parts);
            const int n = static_cast<int>(b);
            std::vector<Rat> in_a(n, Rat(0)), everywhere(n, Rat(1));
            for (long v = 0; v < a; ++v)
                in_a[v] = 1;
            std::vector<std::vector<Rat>> vectors(h.vertex_count(), everywhere);
            for (int v = 0; v < s1; ++v)
                vectors[v] = in_a;
            oracle_value = g_volume(h, vectors, make_complete(n)).get_num();
        }
    } else {
        throw std::runtime_error("unknown formula: " + which);
    }
    json j{{"family", which}, {"value", value.get_str()}};
    if (oracle_value) {
        j["oracle"] = oracle_value->get_str();
        j["delta"] = Int(value - *oracle_value).get_str();
    }
    std::cout << j.dump() << "\n";
    return (!oracle_value || *oracle_value == value) ? exit_ok : exit_fail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact graph homomorphism inequalities toolkit"};
    app.require_subcommand(1);

    std::string h_arg, g_arg, out_path, resume_path, q_range = "2..4";
    std::string poly_path, side = "ab", parts_str, family, h_g6_path;
    std::vector<std::string> chromatic;
    long seed = 0, budget = -1;
    int kq = 0, trials = 20, d = 1, s1 = 1, n_max = 5, afm_n_max = 4, samples = 4;
    long a_colours = 2, b_colours = 2;
    int threads = default_threads();
    bool oracle = false, exhaustive = false;

    // hom
    auto* hom = app.add_subcommand("hom", "weighted homomorphism count");
    hom->add_option("--H", h_arg, "source graph (file, literal, or -)")->required();
    hom->add_option("--G", g_arg, "target graph (file, literal, or -)")->required();

    // certify
    auto* certify = app.add_subcommand("certify", "exact certificates");
    certify->require_subcommand(1);
    auto* afm = certify->add_subcommand("afm", "antiferromagnetism");
    afm->add_option("--G", g_arg, "graph to certify")->required();
    auto* lor = certify->add_subcommand("lorentzian", "Lorentzian property");
    lor->add_option("--chromatic", chromatic, "build h_H(x;G) from H and G")->expected(2);
    lor->add_option("--poly", poly_path, "polynomial JSON file");

    // verify
    auto* verify = app.add_subcommand("verify", "inequality checks");
    verify->require_subcommand(1);
    auto* bswap = verify->add_subcommand("bipartite-swap", "hom(H,G)^2 <= hom(HxK2,G)");
    bswap->add_option("--H", h_arg)->required();
    bswap->add_option("--G", g_arg)->required();
    bswap->add_option("--out", out_path, "JSONL output file (default stdout)");
    auto* cross = verify->add_subcommand("cross-bipartite", "cross-bipartite swapping");
    cross->add_option("--H", h_arg)->required();
    cross->add_option("--Kq", kq, "complete target order (nested-subset mode)");
    cross->add_option("--G", g_arg, "explicit target (subset modes)");
    cross->add_flag("--exhaustive", exhaustive, "all (A,B) subset pairs");
    cross->add_option("--out", out_path);
    auto* wcross = verify->add_subcommand("weighted-cross", "weighted cross-bipartite swapping");
    wcross->add_option("--H", h_arg)->required();
    wcross->add_option("--G", g_arg)->required();
    wcross->add_option("--trials", trials);
    wcross->add_option("--seed", seed);
    wcross->add_option("--out", out_path);

    // search
    auto* search = app.add_subcommand("search", "counterexample sweeps");
    search->require_subcommand(1);
    auto add_search_common = [&](CLI::App* sub) {
        sub->add_option("--budget", budget, "instances to check this run");
        sub->add_option("--out", out_path, "JSONL output file (default stdout)");
        sub->add_option("--resume", resume_path, "checkpoint file");
        sub->add_option("--threads", threads, "worker pool size");
        sub->add_option("--H-g6", h_g6_path, "graph6 source for H ('-' = stdin)");
    };
    auto* zhao = search->add_subcommand("zhao", "hom(H,K_q)^2 <= hom(HxK2,K_q)");
    zhao->add_option("--n-max", n_max, "builtin H enumerator bound");
    zhao->add_option("--q", q_range, "q or lo..hi");
    add_search_common(zhao);
    auto* afm_swap = search->add_subcommand("afm-swap", "bipartite swapping vs sampled AFM G");
    afm_swap->add_option("--n-max", n_max);
    afm_swap->add_option("--afm-seed", seed, "AFM sampler seed");
    afm_swap->add_option("--afm-n-max", afm_n_max, "sampled target size bound");
    afm_swap->add_option("--samples", samples, "AFM targets per H");
    add_search_common(afm_swap);
    auto* s_cross = search->add_subcommand("cross-bipartite", "nested-subset swapping in K_q");
    s_cross->add_option("--n-max", n_max);
    s_cross->add_option("--q", q_range);
    s_cross->add_option("--family", family, "paths | cycles | multipartite");
    add_search_common(s_cross);
    auto* s_lor = search->add_subcommand("lorentzian", "non-Lorentzian h_H over sampled AFM G");
    s_lor->add_option("--n-max", n_max);
    s_lor->add_option("--afm-seed", seed);
    s_lor->add_option("--afm-n-max", afm_n_max);
    s_lor->add_option("--samples", samples);
    add_search_common(s_lor);

    // formulas
    auto* formulas = app.add_subcommand("formulas", "closed-form counts");
    formulas->require_subcommand(1);
    std::string formula_name;
    for (const char* name : {"path-odd", "path-even", "cycle", "multipartite",
                             "multipartite-first"}) {
        auto* sub = formulas->add_subcommand(name);
        sub->add_option("--d", d, "half-length parameter");
        sub->add_option("--a", a_colours);
        sub->add_option("--b", b_colours);
        sub->add_option("--side", side, "ab | ba (even paths)");
        sub->add_option("--parts", parts_str, "comma-separated part sizes");
        sub->add_option("--s1", s1, "first part size (multipartite-first)");
        sub->add_flag("--oracle", oracle, "cross-check against brute force");
        sub->callback([&formula_name, name]() { formula_name = name; });
    }

    // Accepted everywhere for reproducibility plumbing; results never depend
    // on the thread count.
    app.add_option("--seed", seed)->configurable(false);
    app.add_option("--threads", threads)->configurable(false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*hom)
            return run_hom(h_arg, g_arg);
        if (*afm)
            return run_certify_afm(g_arg);
        if (*lor)
            return run_certify_lorentzian(chromatic, poly_path);
        if (*bswap)
            return emit_verdicts({check_bipartite_swapping(resolve_graph(h_arg),
                                                           resolve_graph(g_arg))},
                                 out_path);
        if (*cross) {
            const WeightedGraph h = resolve_graph(h_arg);
            if (kq > 0 && !exhaustive)
                return emit_verdicts(check_cross_bipartite_swapping(h, make_complete(kq),
                                                                    CrossMode::kq_reduced),
                                     out_path);
            const WeightedGraph g = g_arg.empty() ? make_complete(kq) : resolve_graph(g_arg);
            return emit_verdicts(
                check_cross_bipartite_swapping(h, g, CrossMode::exhaustive_subsets), out_path);
        }
        if (*wcross)
            return emit_verdicts(check_weighted_cross_bipartite(resolve_graph(h_arg),
                                                                resolve_graph(g_arg), trials,
                                                                seed),
                                 out_path);
        if (search->parsed()) {
            SearchOptions opt;
            opt.h_n_max = n_max;
            opt.seed = seed;
            opt.afm_n_max = afm_n_max;
            opt.afm_samples = samples;
            opt.budget = budget;
            opt.threads = threads;
            const auto [q_lo, q_hi] = parse_range(q_range);
            opt.q_lo = q_lo;
            opt.q_hi = q_hi;
            std::ifstream g6_file;
            if (!h_g6_path.empty()) {
                if (h_g6_path == "-") {
                    opt.h_g6 = &std::cin;
                } else {
                    g6_file.open(h_g6_path);
                    if (!g6_file)
                        throw std::runtime_error("cannot open " + h_g6_path);
                    opt.h_g6 = &g6_file;
                }
            }
            if (*zhao)
                opt.claim = SearchClaim::zhao_kq;
            else if (*afm_swap)
                opt.claim = SearchClaim::bipartite_swap_afm;
            else if (*s_lor)
                opt.claim = SearchClaim::lorentzian_h;
            else {
                opt.claim = SearchClaim::cross_bipartite_kq;
                if (!family.empty())
                    opt.h_list = family_graphs(family);
            }
            return run_search(std::move(opt), out_path, resume_path);
        }
        if (formulas->parsed())
            return run_formulas(formula_name, d, a_colours, b_colours, side, parts_str, s1,
                                oracle);
        throw std::runtime_error("no subcommand selected");
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_error;
    }
}
