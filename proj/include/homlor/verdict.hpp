#pragma once

#include <homlor/io.hpp>
#include <homlor/rational.hpp>

#include <optional>
#include <string>

namespace homlor {

// Outcome of one inequality check. lhs and rhs are oriented so that
// holds == (lhs <= rhs) for every claim; >=-shaped claims store their
// sides swapped accordingly (documented per claim_id at the call site).
struct Verdict {
    std::string claim_id;
    bool holds = false;
    Rat lhs;
    Rat rhs;
    json instance;
    std::optional<long> seed;
    std::optional<json> witness;
};

inline Verdict make_verdict(std::string claim_id, const Rat& lhs, const Rat& rhs, json instance,
                            std::optional<long> seed = std::nullopt) {
    Verdict v;
    v.claim_id = std::move(claim_id);
    v.lhs = lhs;
    v.rhs = rhs;
    v.holds = lhs <= rhs;
    v.instance = std::move(instance);
    v.seed = seed;
    if (!v.holds)
        v.witness = v.instance; // the instance itself reproduces the failure
    return v;
}

inline json verdict_to_json(const Verdict& v) {
    json j{{"claim_id", v.claim_id},
           {"holds", v.holds},
           {"lhs", format_rational(v.lhs)},
           {"rhs", format_rational(v.rhs)},
           {"instance", v.instance}};
    if (v.seed)
        j["seed"] = *v.seed;
    if (v.witness)
        j["witness"] = *v.witness;
    return j;
}

} // namespace homlor
