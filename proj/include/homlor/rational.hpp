#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace homlor {

using Int = mpz_class;
using Rat = mpq_class;

// Parses "p/q" or "p". Throws on malformed input or zero denominator.
inline Rat parse_rational(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("empty rational literal");
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + s);
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

// Formats in lowest terms, "p" when the denominator is 1.
inline std::string format_rational(const Rat& q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace homlor
