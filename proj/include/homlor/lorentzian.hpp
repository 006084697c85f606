#pragma once

#include <homlor/afm.hpp>
#include <homlor/mconvex.hpp>
#include <homlor/poly.hpp>

#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

namespace homlor {

// Failure evidence: the chain of partial derivatives taken from the input
// polynomial down to the violating one, plus either a non-M-convex pair or
// a Hessian with two or more positive eigenvalues.
struct LorentzianFailure {
    std::vector<int> derivative_path;
    std::optional<MConvexViolation> m_convex_violation;
    std::optional<int> hessian_positive_count;
};

struct LorentzianCertificate {
    bool verdict = false;
    std::optional<LorentzianFailure> failure_witness;
};

// Memo keyed by the canonical polynomial form; the recursion revisits
// identical derivatives along different paths. Safe for concurrent use.
class LorentzianCache {
public:
    std::optional<LorentzianCertificate> find(const std::string& key) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = map_.find(key);
        if (it == map_.end())
            return std::nullopt;
        return it->second;
    }

    void store(const std::string& key, const LorentzianCertificate& cert) {
        std::lock_guard<std::mutex> lock(mutex_);
        map_.emplace(key, cert);
    }

private:
    std::mutex mutex_;
    std::unordered_map<std::string, LorentzianCertificate> map_;
};

namespace detail {

inline LorentzianCertificate lorentzian_recurse(const SparsePolynomial& f, LorentzianCache& cache) {
    // A vanished derivative means the variable is absent; the parent's
    // M-convex support governs. Treated as vacuously Lorentzian.
    if (f.is_zero())
        return {true, std::nullopt};

    const std::string key = f.canonical_key();
    if (auto hit = cache.find(key))
        return *hit;

    LorentzianCertificate cert;
    const int d = f.degree();
    if (d == 2) {
        const WeightedGraph hess = WeightedGraph::from_matrix(f.hessian());
        const int positives = positive_eigenvalue_count(hess);
        cert.verdict = positives <= 1;
        if (!cert.verdict) {
            cert.failure_witness = LorentzianFailure{};
            cert.failure_witness->hessian_positive_count = positives;
        }
    } else {
        const MConvexResult mc = is_m_convex(f.support());
        if (!mc.convex) {
            cert.verdict = false;
            cert.failure_witness = LorentzianFailure{};
            cert.failure_witness->m_convex_violation = mc.violation;
        } else {
            cert.verdict = true;
            for (int i = 0; i < f.n_vars() && cert.verdict; ++i) {
                LorentzianCertificate sub = lorentzian_recurse(f.partial_derivative(i), cache);
                if (!sub.verdict) {
                    cert.verdict = false;
                    cert.failure_witness = std::move(sub.failure_witness);
                    cert.failure_witness->derivative_path.insert(
                        cert.failure_witness->derivative_path.begin(), i);
                }
            }
        }
    }
    cache.store(key, cert);
    return cert;
}

} // namespace detail

// Recursive Lorentzian certification. Rejects non-homogeneous input,
// negative coefficients, and degree below two.
inline LorentzianCertificate is_lorentzian(const SparsePolynomial& f,
                                           LorentzianCache* cache = nullptr) {
    if (!f.is_homogeneous())
        throw std::invalid_argument("is_lorentzian requires a homogeneous polynomial");
    if (!f.has_nonnegative_coefficients())
        throw std::invalid_argument("is_lorentzian requires nonnegative coefficients");
    if (f.degree() < 2)
        throw std::invalid_argument("is_lorentzian requires degree at least two");
    LorentzianCache local;
    return detail::lorentzian_recurse(f, cache ? *cache : local);
}

} // namespace homlor
