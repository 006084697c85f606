#pragma once

#include <homlor/poly.hpp>

#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace homlor {

// A violating triple: a, b in S with a_i > b_i but no j with a_j < b_j and
// a - e_i + e_j in S.
struct MConvexViolation {
    ExponentVector a;
    ExponentVector b;
    int i = -1;
};

struct MConvexResult {
    bool convex = true;
    std::optional<MConvexViolation> violation;
};

// Exchange-property check, O(|S|^2 * n * lookup).
inline MConvexResult is_m_convex(const std::vector<ExponentVector>& s) {
    MConvexResult res;
    if (s.empty())
        return res;
    const size_t n = s.front().size();
    for (const auto& v : s)
        if (v.size() != n)
            throw std::invalid_argument("mixed exponent vector lengths");
    std::set<ExponentVector> lookup(s.begin(), s.end());
    for (const auto& a : lookup)
        for (const auto& b : lookup)
            for (size_t i = 0; i < n; ++i) {
                if (a[i] <= b[i])
                    continue;
                bool exchanged = false;
                ExponentVector c = a;
                --c[static_cast<int>(i)];
                for (size_t j = 0; j < n && !exchanged; ++j) {
                    if (a[j] >= b[j])
                        continue;
                    ++c[j];
                    exchanged = lookup.count(c) > 0;
                    --c[j];
                }
                if (!exchanged) {
                    res.convex = false;
                    res.violation = MConvexViolation{a, b, static_cast<int>(i)};
                    return res;
                }
            }
    return res;
}

} // namespace homlor
