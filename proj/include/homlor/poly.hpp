#pragma once

#include <homlor/rational.hpp>

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace homlor {

// Exponent vector of a monomial; length equals the ambient variable count.
using ExponentVector = std::vector<int>;

inline int total_degree(const ExponentVector& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

// Multivariate polynomial over exact rationals, exponent vector -> nonzero
// coefficient. Terms are kept lex-sorted, which doubles as the canonical
// form for serialization and memo keys.
class SparsePolynomial {
public:
    explicit SparsePolynomial(int n_vars) : n_vars_(n_vars) {
        if (n_vars < 1)
            throw std::invalid_argument("polynomial needs at least one variable");
    }

    int n_vars() const { return n_vars_; }
    const std::map<ExponentVector, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const ExponentVector& exp, const Rat& coef) {
        if (static_cast<int>(exp.size()) != n_vars_)
            throw std::invalid_argument("exponent vector length mismatch");
        for (int e : exp)
            if (e < 0)
                throw std::invalid_argument("negative exponent");
        if (coef == 0)
            return;
        Rat c = coef;
        c.canonicalize(); // Rat(p, q) does not reduce on construction
        auto [it, inserted] = terms_.emplace(exp, c);
        if (!inserted) {
            it->second += coef;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    // Total degree; -1 for the zero polynomial.
    int degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_)
            d = std::max(d, total_degree(e));
        return d;
    }

    bool is_homogeneous() const {
        const int d = degree();
        for (const auto& [e, c] : terms_)
            if (total_degree(e) != d)
                return false;
        return true;
    }

    bool has_nonnegative_coefficients() const {
        for (const auto& [e, c] : terms_)
            if (c < 0)
                return false;
        return true;
    }

    SparsePolynomial partial_derivative(int i) const {
        if (i < 0 || i >= n_vars_)
            throw std::out_of_range("variable index out of range");
        SparsePolynomial d(n_vars_);
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0)
                continue;
            ExponentVector e2 = e;
            --e2[i];
            d.add_term(e2, c * e[i]);
        }
        return d;
    }

    Rat evaluate(const std::vector<Rat>& point) const {
        if (static_cast<int>(point.size()) != n_vars_)
            throw std::invalid_argument("evaluation point length mismatch");
        Rat sum = 0;
        for (const auto& [e, c] : terms_) {
            Rat term = c;
            bool zero = false;
            for (int i = 0; i < n_vars_ && !zero; ++i) {
                for (int k = 0; k < e[i]; ++k) {
                    if (point[i] == 0) {
                        zero = true;
                        break;
                    }
                    term *= point[i];
                }
            }
            if (!zero)
                sum += term;
        }
        return sum;
    }

    // Matrix of second partials; requires homogeneous degree 2.
    std::vector<std::vector<Rat>> hessian() const {
        if (degree() != 2 || !is_homogeneous())
            throw std::invalid_argument("hessian requires a homogeneous quadratic");
        std::vector<std::vector<Rat>> h(n_vars_, std::vector<Rat>(n_vars_, Rat(0)));
        for (const auto& [e, c] : terms_) {
            int i = -1, j = -1;
            for (int v = 0; v < n_vars_; ++v) {
                if (e[v] == 2) { i = j = v; }
                else if (e[v] == 1) { (i == -1 ? i : j) = v; }
            }
            if (i == j)
                h[i][i] = 2 * c;
            else {
                h[i][j] = c;
                h[j][i] = c;
            }
        }
        return h;
    }

    std::vector<ExponentVector> support() const {
        std::vector<ExponentVector> s;
        s.reserve(terms_.size());
        for (const auto& [e, c] : terms_)
            s.push_back(e);
        return s;
    }

    // Canonical text form: lex-sorted terms, coefficients in lowest terms.
    std::string canonical_key() const {
        std::string key = std::to_string(n_vars_) + "|";
        for (const auto& [e, c] : terms_) {
            for (int x : e) {
                key += std::to_string(x);
                key += ',';
            }
            key += ':';
            key += format_rational(c);
            key += ';';
        }
        return key;
    }

    bool operator==(const SparsePolynomial& o) const {
        return n_vars_ == o.n_vars_ && terms_ == o.terms_;
    }

private:
    int n_vars_;
    std::map<ExponentVector, Rat> terms_;
};

// Polarization F_f(v_1,...,v_d) = (1/d!) d/dx_1 ... d/dx_d f(x_1 v_1 + ... + x_d v_d),
// computed by inclusion-exclusion over subsets: for homogeneous f of degree d,
// the multilinear coefficient equals sum_S (-1)^{d-|S|} f(sum_{i in S} v_i).
inline Rat mixed_form(const SparsePolynomial& f, const std::vector<std::vector<Rat>>& vectors) {
    const int d = f.degree();
    if (d < 0)
        return Rat(0);
    if (!f.is_homogeneous())
        throw std::invalid_argument("mixed_form requires a homogeneous polynomial");
    if (static_cast<int>(vectors.size()) != d)
        throw std::invalid_argument("mixed_form needs one vector per degree");
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != f.n_vars())
            throw std::invalid_argument("mixed_form vector length mismatch");
    Rat sum = 0;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        std::vector<Rat> point(f.n_vars(), Rat(0));
        int bits = 0;
        for (int i = 0; i < d; ++i)
            if (mask & (1u << i)) {
                ++bits;
                for (int k = 0; k < f.n_vars(); ++k)
                    point[k] += vectors[i][k];
            }
        const Rat val = f.evaluate(point);
        sum += ((d - bits) % 2 == 0) ? val : -val;
    }
    Int fact = 1;
    for (int k = 2; k <= d; ++k)
        fact *= k;
    return sum / Rat(fact);
}

} // namespace homlor
