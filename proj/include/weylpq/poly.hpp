#pragma once

/**
 * @file poly.hpp
 * @brief Sparse bivariate polynomials in p, q over arbitrary-precision integers.
 *
 * Every polynomial family computed by the library (deformed multiplicities,
 * partition functions, branching polynomials, colored-root statistics) lives
 * in Z[p,q]. Terms are kept sorted by (deg_p, deg_q) ascending and zero-free,
 * so structural equality is semantic equality.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace weylpq {

using Integer = boost::multiprecision::cpp_int;

class BiPoly {
public:
    struct Term {
        std::uint32_t p = 0;
        std::uint32_t q = 0;
        Integer c;

        std::uint64_t key() const { return (std::uint64_t(p) << 32) | q; }
        bool operator==(const Term& o) const { return p == o.p && q == o.q && c == o.c; }
    };

    BiPoly() = default;
    explicit BiPoly(Integer constant) {
        if (constant != 0) terms_.push_back({0, 0, std::move(constant)});
    }
    BiPoly(long long constant) : BiPoly(Integer(constant)) {}

    static BiPoly monomial(Integer c, std::uint32_t p_deg, std::uint32_t q_deg) {
        BiPoly r;
        if (c != 0) r.terms_.push_back({p_deg, q_deg, std::move(c)});
        return r;
    }
    static BiPoly p() { return monomial(1, 1, 0); }
    static BiPoly q() { return monomial(1, 0, 1); }
    static BiPoly one() { return BiPoly(1); }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    static BiPoly from_terms(std::vector<Term> terms) {
        BiPoly r;
        r.terms_ = std::move(terms);
        r.canonicalize();
        return r;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    std::uint32_t degree_p() const {
        std::uint32_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.p);
        return d;
    }
    std::uint32_t degree_q() const {
        std::uint32_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.q);
        return d;
    }

    /// Coefficient of p^i q^j (zero when absent).
    Integer coeff(std::uint32_t i, std::uint32_t j) const {
        const std::uint64_t k = (std::uint64_t(i) << 32) | j;
        auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                                   [](const Term& t, std::uint64_t key) { return t.key() < key; });
        if (it != terms_.end() && it->key() == k) return it->c;
        return 0;
    }

    bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    BiPoly& operator+=(const BiPoly& o) {
        if (o.terms_.empty()) return *this;
        if (terms_.empty()) {
            terms_ = o.terms_;
            return *this;
        }
        terms_ = merge(terms_, o.terms_, false);
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) {
        if (o.terms_.empty()) return *this;
        terms_ = merge(terms_, o.terms_, true);
        return *this;
    }
    BiPoly operator-() const {
        BiPoly r = *this;
        for (auto& t : r.terms_) t.c = -t.c;
        return r;
    }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.terms_.size() == 1 && a.terms_[0].p == 0 && a.terms_[0].q == 0 && a.terms_[0].c == 1)
            return b;
        if (b.terms_.size() == 1 && b.terms_[0].p == 0 && b.terms_[0].q == 0 && b.terms_[0].c == 1)
            return a;
        std::vector<Term> out;
        out.reserve(a.terms_.size() * b.terms_.size());
        for (const auto& x : a.terms_)
            for (const auto& y : b.terms_) out.push_back({x.p + y.p, x.q + y.q, x.c * y.c});
        return from_terms(std::move(out));
    }
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }

    /// Multiplication by the monomial c p^i q^j.
    BiPoly times_monomial(const Integer& c, std::uint32_t i, std::uint32_t j) const {
        if (c == 0) return {};
        BiPoly r = *this;
        for (auto& t : r.terms_) {
            t.p += i;
            t.q += j;
            t.c *= c;
        }
        return r;
    }

    BiPoly pow(unsigned e) const {
        BiPoly result = one();
        BiPoly base = *this;
        while (e) {
            if (e & 1u) result *= base;
            e >>= 1u;
            if (e) base *= base;
        }
        return result;
    }

    /// Sum of all coefficients, i.e. the value at p = q = 1.
    Integer coefficient_sum() const {
        Integer s = 0;
        for (const auto& t : terms_) s += t.c;
        return s;
    }

    std::string to_string() const;

private:
    std::vector<Term> terms_;

    void canonicalize() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return a.key() < b.key(); });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().key() == t.key())
                out.back().c += t.c;
            else
                out.push_back(std::move(t));
        }
        out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.c == 0; }),
                  out.end());
        terms_ = std::move(out);
    }

    static std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b,
                                   bool subtract) {
        std::vector<Term> out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].key() < b[j].key())) {
                out.push_back(a[i++]);
            } else if (i == a.size() || b[j].key() < a[i].key()) {
                out.push_back(b[j]);
                if (subtract) out.back().c = -out.back().c;
                ++j;
            } else {
                Integer c = subtract ? Integer(a[i].c - b[j].c) : Integer(a[i].c + b[j].c);
                if (c != 0) out.push_back({a[i].p, a[i].q, std::move(c)});
                ++i;
                ++j;
            }
        }
        return out;
    }
};

inline BiPoly add(const BiPoly& a, const BiPoly& b) { return a + b; }
inline BiPoly mul(const BiPoly& a, const BiPoly& b) { return a * b; }

namespace detail {
/// Row n of Pascal's triangle. Rows live in a deque, so returned references survive later growth.
inline const std::vector<Integer>& binomial_row(std::uint32_t n) {
    thread_local std::deque<std::vector<Integer>> rows{{Integer(1)}};
    while (rows.size() <= n) {
        const auto& prev = rows.back();
        std::vector<Integer> next(prev.size() + 1);
        next[0] = 1;
        next.back() = 1;
        for (std::size_t k = 1; k + 1 < next.size(); ++k) next[k] = prev[k - 1] + prev[k];
        rows.push_back(std::move(next));
    }
    return rows[n];
}
}  // namespace detail

/// f(p+1, q+1), by binomial expansion of every monomial.
inline BiPoly shift_vars(const BiPoly& f) {
    std::vector<BiPoly::Term> out;
    for (const auto& t : f.terms()) {
        const auto& rp = detail::binomial_row(t.p);
        const auto& rq = detail::binomial_row(t.q);
        for (std::uint32_t i = 0; i <= t.p; ++i)
            for (std::uint32_t j = 0; j <= t.q; ++j) out.push_back({i, j, t.c * rp[i] * rq[j]});
    }
    return BiPoly::from_terms(std::move(out));
}

/// True iff no stored coefficient is negative (the zero polynomial qualifies).
inline bool is_nonnegative(const BiPoly& f) {
    return std::all_of(f.terms().begin(), f.terms().end(),
                       [](const BiPoly::Term& t) { return t.c > 0; });
}

/// Substitutes integer values for p and/or q; an absent value leaves that variable symbolic.
inline BiPoly specialize(const BiPoly& f, std::optional<long long> p_val,
                         std::optional<long long> q_val) {
    if (!p_val && !q_val) return f;
    std::vector<BiPoly::Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        Integer c = t.c;
        std::uint32_t pd = t.p, qd = t.q;
        if (p_val) {
            c *= boost::multiprecision::pow(Integer(*p_val), t.p);
            pd = 0;
        }
        if (q_val) {
            c *= boost::multiprecision::pow(Integer(*q_val), t.q);
            qd = 0;
        }
        out.push_back({pd, qd, std::move(c)});
    }
    return BiPoly::from_terms(std::move(out));
}

/// Substitutes p := q, collapsing the double deformation to a single-variable one.
inline BiPoly diagonal(const BiPoly& f) {
    std::vector<BiPoly::Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) out.push_back({0, t.p + t.q, t.c});
    return BiPoly::from_terms(std::move(out));
}

inline std::string BiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Integer mag = t.c < 0 ? Integer(-t.c) : t.c;
        if (first) {
            if (t.c < 0) os << "-";
        } else {
            os << (t.c < 0 ? " - " : " + ");
        }
        first = false;
        const bool has_var = t.p > 0 || t.q > 0;
        if (!has_var || mag != 1) {
            os << mag;
            if (has_var) os << "*";
        }
        if (t.p > 0) {
            os << "p";
            if (t.p > 1) os << "^" << t.p;
        }
        if (t.q > 0) {
            if (t.p > 0) os << "*";
            os << "q";
            if (t.q > 1) os << "^" << t.q;
        }
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const BiPoly& f) { return os << f.to_string(); }

}  // namespace weylpq
