#pragma once

#include <homlor/enumerate.hpp>
#include <homlor/homcount.hpp>
#include <homlor/io.hpp>
#include <homlor/lorentzian.hpp>
#include <homlor/verify.hpp>

#include <atomic>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <thread>
#include <vector>

namespace homlor {

enum class SearchClaim {
    zhao_kq,            // hom(H,K_q)^2 <= hom(H x K2, K_q)
    bipartite_swap_afm, // hom(H,G)^2 <= hom(H x K2, G) for sampled AFM G
    cross_bipartite_kq, // nested-subset cross swapping in K_q
    lorentzian_h        // exploratory: is h_H(x;G) Lorentzian for non-complete H?
};

struct SearchOptions {
    SearchClaim claim = SearchClaim::zhao_kq;
    int h_n_max = 5;              // builtin enumerator vertex bound
    std::istream* h_g6 = nullptr; // when set, H comes from graph6 lines instead
    std::vector<WeightedGraph> h_list; // when nonempty, an explicit H list wins
    int q_lo = 2, q_hi = 4;       // K_q range for the *_kq claims
    long seed = 0;                // base seed for AFM sampling
    int afm_n_max = 4;
    int afm_samples = 4;          // sampled targets per H for the AFM claims
    long budget = -1;             // instances to check this run; -1 = unbounded
    long cursor = 0;              // instances to skip (resume point)
    int threads = 1;
};

struct SearchResult {
    long checked = 0;
    long failures = 0;
    long cursor = 0;      // total instances consumed, resumable
    bool exhausted = false;
};

namespace detail {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Per-instance sampler seed, independent of visit order.
inline long instance_seed(long base, long index) {
    return static_cast<long>(
        splitmix64(static_cast<uint64_t>(base) ^ splitmix64(static_cast<uint64_t>(index))) >> 1);
}

// Source graphs: the builtin enumerator (connected, loopless, cheap dedup)
// or a graph6 stream; malformed stream lines are skipped with a warning.
class HSource {
public:
    HSource(const SearchOptions& opt, std::ostream* warn) : warn_(warn) {
        if (!opt.h_list.empty()) {
            builtin_ = opt.h_list;
            return;
        }
        if (opt.h_g6 != nullptr) {
            stream_ = opt.h_g6;
            return;
        }
        for (int n = 1; n <= opt.h_n_max; ++n)
            for_each_unweighted_graph(n, false, true, Dedup::cheap,
                                      [&](const WeightedGraph& g) { builtin_.push_back(g); });
    }

    std::optional<WeightedGraph> next() {
        if (stream_ == nullptr) {
            if (pos_ >= builtin_.size())
                return std::nullopt;
            return builtin_[pos_++];
        }
        std::string line;
        while (std::getline(*stream_, line)) {
            if (line.empty())
                continue;
            try {
                return graph_from_graph6(line);
            } catch (const std::exception& e) {
                if (warn_)
                    *warn_ << "skipping malformed graph6 line: " << e.what() << "\n";
            }
        }
        return std::nullopt;
    }

private:
    std::istream* stream_ = nullptr;
    std::vector<WeightedGraph> builtin_;
    size_t pos_ = 0;
    std::ostream* warn_;
};

struct SearchInstance {
    long index = 0;
    WeightedGraph h{1};
    int param = 0; // q for the K_q claims, sample slot for the AFM claims
};

inline std::vector<Verdict> run_search_instance(const SearchOptions& opt,
                                                const SearchInstance& inst) {
    switch (opt.claim) {
    case SearchClaim::zhao_kq: {
        Verdict v = check_bipartite_swapping(inst.h, make_complete(inst.param));
        v.claim_id = "zhao_kq";
        return {std::move(v)};
    }
    case SearchClaim::cross_bipartite_kq:
        return check_cross_bipartite_swapping(inst.h, make_complete(inst.param),
                                              CrossMode::kq_reduced);
    case SearchClaim::bipartite_swap_afm: {
        const long s = instance_seed(opt.seed, inst.index);
        AfmSampler sampler(s, opt.afm_n_max);
        Verdict v = check_bipartite_swapping(inst.h, sampler.next());
        v.claim_id = "bipartite_swap_afm";
        v.seed = s;
        if (!v.holds)
            v.witness = v.instance;
        return {std::move(v)};
    }
    case SearchClaim::lorentzian_h: {
        const long s = instance_seed(opt.seed, inst.index);
        AfmSampler sampler(s, opt.afm_n_max);
        const WeightedGraph g = sampler.next();
        const SparsePolynomial f = g_chromatic_polynomial(inst.h, g);
        const LorentzianCertificate cert = is_lorentzian(f);
        // Encoded as 0/1 so that holds keeps the (lhs <= rhs) convention.
        Verdict v;
        v.claim_id = "lorentzian_h";
        v.holds = cert.verdict;
        v.lhs = cert.verdict ? 0 : 1;
        v.rhs = 0;
        v.instance = json{{"H", graph_to_json(inst.h)}, {"G", graph_to_json(g)}};
        v.seed = s;
        if (!v.holds)
            v.witness = v.instance;
        return {std::move(v)};
    }
    }
    throw std::logic_error("unknown search claim");
}

} // namespace detail

// Streams one Verdict list per instance to `emit` in a stable order that
// does not depend on the thread count. Returns the cursor for resumption;
// the caller persists it (instance boundaries only).
inline SearchResult search_counterexamples(const SearchOptions& opt,
                                           const std::function<void(const Verdict&)>& emit,
                                           std::ostream* warn = nullptr) {
    const int threads = std::max(1, opt.threads);
    detail::HSource source(opt, warn);
    SearchResult res;
    res.cursor = opt.cursor;

    // Instance stream: every H crossed with its target list, indexed globally.
    long index = 0;
    std::optional<WeightedGraph> current;
    int param_pos = 0;
    const bool kq_claim =
        opt.claim == SearchClaim::zhao_kq || opt.claim == SearchClaim::cross_bipartite_kq;
    const int params = kq_claim ? opt.q_hi - opt.q_lo + 1 : opt.afm_samples;
    auto next_instance = [&]() -> std::optional<detail::SearchInstance> {
        while (true) {
            if (!current) {
                current = source.next();
                if (!current)
                    return std::nullopt;
                param_pos = 0;
                // The exploratory claim only concerns non-complete H.
                if (opt.claim == SearchClaim::lorentzian_h &&
                    *current == make_complete(current->vertex_count())) {
                    current.reset();
                    continue;
                }
            }
            if (param_pos == params) {
                current.reset();
                continue;
            }
            detail::SearchInstance inst;
            inst.index = index++;
            inst.h = *current;
            inst.param = kq_claim ? opt.q_lo + param_pos : param_pos;
            ++param_pos;
            return inst;
        }
    };

    while (true) {
        if (opt.budget >= 0 && res.checked >= opt.budget)
            return res;
        // Fill a batch, skipping already-consumed instances on resume.
        std::vector<detail::SearchInstance> batch;
        const long want = opt.budget >= 0 ? std::min<long>(opt.budget - res.checked, 64) : 64;
        while (static_cast<long>(batch.size()) < want) {
            auto inst = next_instance();
            if (!inst)
                break;
            if (inst->index < opt.cursor)
                continue;
            batch.push_back(std::move(*inst));
        }
        if (batch.empty()) {
            res.exhausted = next_instance() == std::nullopt;
            return res;
        }
        std::vector<std::vector<Verdict>> results(batch.size());
        std::atomic<size_t> cursor{0};
        auto worker = [&]() {
            for (size_t i; (i = cursor.fetch_add(1)) < batch.size();)
                results[i] = detail::run_search_instance(opt, batch[i]);
        };
        if (threads == 1 || batch.size() == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t)
                pool.emplace_back(worker);
            for (auto& th : pool)
                th.join();
        }
        for (size_t i = 0; i < batch.size(); ++i) {
            bool failed = false;
            for (const Verdict& v : results[i]) {
                emit(v);
                failed = failed || !v.holds;
            }
            ++res.checked;
            res.failures += failed ? 1 : 0;
            res.cursor = batch[i].index + 1;
        }
    }
}

// ---- checkpoint plumbing: {"cursor": n, "seed": s} ----

inline json checkpoint_to_json(long cursor, long seed) {
    return json{{"cursor", cursor}, {"seed", seed}};
}

inline std::pair<long, long> checkpoint_from_json(const json& j) {
    return {j.at("cursor").get<long>(), j.at("seed").get<long>()};
}

} // namespace homlor
