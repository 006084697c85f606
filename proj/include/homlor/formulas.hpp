#pragma once

#include <homlor/rational.hpp>

#include <stdexcept>
#include <vector>

namespace homlor {

inline Int binomial(long n, long k) {
    if (k < 0 || k > n)
        return 0;
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Int factorial(long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// Stirling number of the second kind: partitions of [r] into l nonempty
// subsets. S(0,0) = 1.
inline Int stirling2(int r, int l) {
    if (r < 0 || l < 0)
        throw std::invalid_argument("stirling2 arguments must be nonnegative");
    if (l > r)
        return 0;
    if (r == 0)
        return 1;
    if (l == 0)
        return 0;
    std::vector<std::vector<Int>> s(r + 1, std::vector<Int>(l + 1, Int(0)));
    s[0][0] = 1;
    for (int n = 1; n <= r; ++n)
        for (int k = 1; k <= l; ++k)
            s[n][k] = s[n - 1][k] * k + s[n - 1][k - 1];
    return s[r][l];
}

inline Int int_pow(long base, int exp) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
    return r;
}

namespace detail {
inline void require_ab(long a, long b) {
    if (a < 2)
        throw std::invalid_argument("closed forms require a >= 2");
    if (b < a)
        throw std::invalid_argument("closed forms require a <= b");
}
} // namespace detail

// List colourings of the odd path u1 v1 ... ud vd (length 2d-1): the u-side
// gets a colours, the v-side b colours, a <= b.
inline Int n_path_odd(int d, long a, long b) {
    if (d < 1)
        throw std::invalid_argument("n_path_odd requires d >= 1");
    detail::require_ab(a, b);
    Int sum = 0;
    for (int l = 0; l <= d - 1; ++l)
        sum += binomial(d - 1, l) * a * int_pow(a - 1, l) * int_pow(b - 1, d - l) * int_pow(b - 2, l);
    return sum;
}

enum class EvenPathSide { ab, ba }; // which list colours the (d+1)-vertex side

// List colourings of the even path u1 v1 ... ud vd u_{d+1} (length 2d).
// ab: the longer u-side gets the a colours; ba: it gets the b colours.
inline Int n_path_even(int d, long a, long b, EvenPathSide side) {
    if (d < 1)
        throw std::invalid_argument("n_path_even requires d >= 1");
    detail::require_ab(a, b);
    Int sum = 0;
    if (side == EvenPathSide::ab) {
        for (int l = 0; l <= d; ++l)
            sum += binomial(d, l) * a * int_pow(a - 1, l) * int_pow(b - 1, d - l) * int_pow(b - 2, l);
    } else {
        for (int l = 0; l <= d - 1; ++l)
            sum += binomial(d - 1, l) * a * int_pow(a - 1, l) * int_pow(b - 1, d - l + 1) * int_pow(b - 2, l);
    }
    return sum;
}

// List colourings of the cycle of length 2d; symmetric in the two sides.
inline Int n_cycle(int d, long a, long b) {
    if (d < 2)
        throw std::invalid_argument("n_cycle requires d >= 2");
    detail::require_ab(a, b);
    Int sum = 0;
    for (int l = 0; l <= d; ++l) {
        Int cyc = int_pow(a - 1, l);
        cyc += (l % 2 == 0) ? Int(a - 1) : Int(1 - a);
        sum += binomial(d, l) * cyc * int_pow(b - 1, d - l) * int_pow(b - 2, l);
    }
    return sum;
}

// Proper a-colourings of an l-cycle: (a-1)^l + (-1)^l (a-1).
inline Int cycle_chromatic(int l, long a) {
    if (l < 3)
        throw std::invalid_argument("cycle_chromatic requires l >= 3");
    if (a < 1)
        throw std::invalid_argument("cycle_chromatic requires a >= 1");
    Int r = int_pow(a - 1, l);
    r += (l % 2 == 0) ? Int(a - 1) : Int(1 - a);
    return r;
}

// Proper a-colourings of K(r_1,...,r_k) via the Stirling recursion
// N_k(r_1,...; a) = sum_l C(a,l) S(r_1,l) l! N_{k-1}(r_2,...; a-l).
inline Int n_multipartite(const std::vector<int>& rs, long a) {
    if (a < 0)
        throw std::invalid_argument("colour count must be nonnegative");
    for (int r : rs)
        if (r < 0)
            throw std::invalid_argument("part sizes must be nonnegative");
    if (rs.empty())
        return 1;
    const std::vector<int> rest(rs.begin() + 1, rs.end());
    Int sum = 0;
    for (long l = 0; l <= std::min<long>(a, rs[0]); ++l)
        sum += binomial(a, l) * stirling2(rs[0], static_cast<int>(l)) * factorial(l) *
               n_multipartite(rest, a - l);
    return sum;
}

// Homomorphic copies of K(s1, rs...) in K_b with the first part mapped
// into a fixed a-subset A of the b colours, the rest anywhere in B = [b].
inline Int n_multipartite_first_part(int s1, const std::vector<int>& rs, long a, long b) {
    if (s1 < 0)
        throw std::invalid_argument("part sizes must be nonnegative");
    if (a < 0 || b < a)
        throw std::invalid_argument("requires 0 <= a <= b");
    Int sum = 0;
    for (long l = 0; l <= std::min({a, b, static_cast<long>(s1)}); ++l)
        sum += binomial(a, l) * stirling2(s1, static_cast<int>(l)) * factorial(l) *
               n_multipartite(rs, b - l);
    return sum;
}

} // namespace homlor
