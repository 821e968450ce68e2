#pragma once

/**
 * @file rootsys.hpp
 * @brief Finite crystallographic root systems, their Weyl groups and Levi subsystems.
 *
 * Conventions:
 *  - Bourbaki node numbering (1-based in text, 0-based in code).
 *  - cartan[i][j] = <alpha_j, alpha_i^vee>, so column j holds the weight
 *    coordinates of alpha_j.
 *  - Weights are stored in fundamental-weight coordinates, roots in
 *    simple-root coordinates; conversion goes through the integer adjugate
 *    of the Cartan matrix.
 *  - The invariant form is the one of the standard Bourbaki realization:
 *    (alpha_i, alpha_j) = scale * d_i * cartan[i][j] where d is the minimal
 *    integral symmetrizer (short roots have d = 1) and scale is 1/2 for
 *    B_n and F_4, 1 otherwise.
 */

#include "weylpq/error.hpp"
#include "weylpq/lattice.hpp"

#include <boost/rational.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace weylpq {

using Rational = boost::rational<long long>;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// Dense n x n integer matrix, n <= kMaxRank, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n) : n_(n) {}
    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    std::size_t size() const { return n_; }
    int operator()(std::size_t i, std::size_t j) const { return a_[i * kMaxRank + j]; }
    int& operator()(std::size_t i, std::size_t j) { return a_[i * kMaxRank + j]; }

    template <class Tag>
    Lattice<Tag> apply(const Lattice<Tag>& v) const {
        Lattice<Tag> r(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            int s = 0;
            for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j) * v[j];
            r[i] = s;
        }
        return r;
    }
    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
        IntMatrix r(x.n_);
        for (std::size_t i = 0; i < x.n_; ++i)
            for (std::size_t j = 0; j < x.n_; ++j) {
                int s = 0;
                for (std::size_t k = 0; k < x.n_; ++k) s += x(i, k) * y(k, j);
                r(i, j) = s;
            }
        return r;
    }
    bool operator==(const IntMatrix& o) const {
        if (n_ != o.n_) return false;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if ((*this)(i, j) != o(i, j)) return false;
        return true;
    }

private:
    std::array<int, kMaxRank * kMaxRank> a_{};
    std::size_t n_ = 0;
};

/// Determinant by fraction-free (Bareiss) elimination.
inline long long determinant(const IntMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    std::vector<std::vector<long long>> a(n, std::vector<long long>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    long long sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

/// Integer adjugate, adj(m) * m = det(m) * I.
inline IntMatrix adjugate(const IntMatrix& m) {
    const std::size_t n = m.size();
    IntMatrix adj(n);
    if (n == 1) {
        adj(0, 0) = 1;
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            IntMatrix minor(n - 1);
            for (std::size_t r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (std::size_t c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor(rr, cc++) = m(r, c);
                }
                ++rr;
            }
            const long long d = determinant(minor);
            adj(i, j) = static_cast<int>(((i + j) % 2 ? -d : d));
        }
    return adj;
}

struct WeylElement {
    IntMatrix matrix;       ///< action on weight coordinates
    IntMatrix root_matrix;  ///< the same element acting on simple-root coordinates
    int sign = 1;           ///< (-1)^length
    int length = 0;
};

using LeviMask = std::uint32_t;

class RootSystem {
public:
    Family family() const { return family_; }
    std::size_t rank() const { return rank_; }
    const IntMatrix& cartan() const { return cartan_; }
    const std::vector<int>& symmetrizer() const { return d_; }
    Rational pairing_scale() const { return scale_; }
    const std::vector<RootVector>& positive_roots() const { return roots_; }
    long long weyl_order() const { return weyl_order_; }
    long long cartan_determinant() const { return det_; }
    const IntMatrix& cartan_adjugate() const { return adj_; }
    std::string name() const { return std::string(1, static_cast<char>(family_)) + std::to_string(rank_); }

    Weight rho() const {
        Weight r(rank_);
        for (auto& x : r) x = 1;
        return r;
    }
    Weight zero_weight() const { return Weight(rank_); }
    RootVector zero_root() const { return RootVector(rank_); }

    /// Weight coordinates of a root-lattice element.
    Weight to_weight(const RootVector& r) const {
        Weight w(rank_);
        for (std::size_t i = 0; i < rank_; ++i) {
            int s = 0;
            for (std::size_t j = 0; j < rank_; ++j) s += cartan_(i, j) * r[j];
            w[i] = s;
        }
        return w;
    }

    /// Solves C r = v exactly; empty when v is not in the root lattice.
    std::optional<RootVector> to_root_coords(const Weight& v) const {
        RootVector r(rank_);
        for (std::size_t i = 0; i < rank_; ++i) {
            long long s = 0;
            for (std::size_t j = 0; j < rank_; ++j) s += static_cast<long long>(adj_(i, j)) * v[j];
            if (s % det_ != 0) return std::nullopt;
            r[i] = static_cast<int>(s / det_);
        }
        return r;
    }

    /// Root coordinates of v scaled by det(C); always integral.
    std::array<long long, kMaxRank> scaled_root_coords(const Weight& v) const {
        std::array<long long, kMaxRank> r{};
        for (std::size_t i = 0; i < rank_; ++i)
            for (std::size_t j = 0; j < rank_; ++j) r[i] += static_cast<long long>(adj_(i, j)) * v[j];
        return r;
    }

    bool dominance_leq(const Weight& a, const Weight& b) const {
        auto r = to_root_coords(b - a);
        return r && r->nonnegative();
    }

    bool is_dominant(const Weight& v) const { return v.nonnegative(); }

    /// (lambda, beta) for a weight and a root-lattice element, in the Bourbaki normalization.
    Rational pairing(const Weight& lambda, const RootVector& beta) const {
        long long s = 0;
        for (std::size_t j = 0; j < rank_; ++j) s += static_cast<long long>(d_[j]) * lambda[j] * beta[j];
        return scale_ * Rational(s);
    }

    /// (u, v) for two root-lattice elements.
    Rational pairing(const RootVector& u, const RootVector& v) const { return pairing(to_weight(u), v); }

    /// (lambda, mu) for two weights, scaled by det(C) / scale so that it is an integer.
    long long scaled_weight_form(const Weight& lambda, const Weight& mu) const {
        auto r = scaled_root_coords(lambda);
        long long s = 0;
        for (std::size_t j = 0; j < rank_; ++j) s += r[j] * d_[j] * mu[j];
        return s;
    }

    /// s_i(v) = v - v_i alpha_i in weight coordinates.
    Weight reflect(const Weight& v, std::size_t i) const {
        Weight r = v;
        const int k = v[i];
        if (k == 0) return r;
        for (std::size_t a = 0; a < rank_; ++a) r[a] -= k * cartan_(a, i);
        return r;
    }

    RootVector reflect(const RootVector& b, std::size_t i) const {
        RootVector r = b;
        int k = 0;
        for (std::size_t c = 0; c < rank_; ++c) k += cartan_(i, c) * b[c];
        r[i] -= k;
        return r;
    }

    const std::vector<Weight>& simple_roots_as_weights() const { return simple_w_; }

    friend RootSystem build(Family family, std::size_t rank);

private:
    Family family_ = Family::A;
    std::size_t rank_ = 0;
    IntMatrix cartan_;
    IntMatrix adj_;
    long long det_ = 1;
    std::vector<int> d_;
    Rational scale_{1};
    std::vector<RootVector> roots_;
    std::vector<Weight> simple_w_;
    long long weyl_order_ = 1;
};

namespace detail {

inline long long factorial(long long n) {
    long long r = 1;
    for (long long k = 2; k <= n; ++k) r *= k;
    return r;
}

inline std::vector<RootVector> generate_positive_roots(const IntMatrix& c, std::size_t n) {
    std::vector<RootVector> roots;
    std::unordered_set<RootVector, LatticeHash> seen;
    for (std::size_t i = 0; i < n; ++i) {
        roots.push_back(RootVector::unit(n, i));
        seen.insert(roots.back());
    }
    // Roots are discovered in nondecreasing height, so every alpha_i-string
    // below the current root is already known when it is examined.
    for (std::size_t idx = 0; idx < roots.size(); ++idx) {
        const RootVector beta = roots[idx];
        for (std::size_t i = 0; i < n; ++i) {
            if (beta == RootVector::unit(n, i)) continue;
            int down = 0;
            RootVector x = beta;
            while (true) {
                x[i] -= 1;
                if (!seen.count(x)) break;
                ++down;
            }
            int pair = 0;
            for (std::size_t j = 0; j < n; ++j) pair += c(i, j) * beta[j];
            const int up = down - pair;
            if (up > 0) {
                RootVector next = beta;
                next[i] += 1;
                if (seen.insert(next).second) roots.push_back(next);
            }
        }
    }
    std::stable_sort(roots.begin(), roots.end(),
                     [](const RootVector& a, const RootVector& b) { return a.sum() < b.sum(); });
    return roots;
}

}  // namespace detail

/// Cartan data for the given family and rank; throws PreconditionError on invalid combinations.
inline RootSystem build(Family family, std::size_t rank) {
    auto bad = [&] {
        throw PreconditionError(std::string("invalid root system ") + static_cast<char>(family) +
                                std::to_string(rank));
    };
    switch (family) {
        case Family::A: if (rank < 1 || rank > kMaxRank) bad(); break;
        case Family::B:
        case Family::C: if (rank < 2 || rank > kMaxRank) bad(); break;
        case Family::D: if (rank < 3 || rank > kMaxRank) bad(); break;
        case Family::E: if (rank < 6 || rank > 8) bad(); break;
        case Family::F: if (rank != 4) bad(); break;
        case Family::G: if (rank != 2) bad(); break;
    }
    const std::size_t n = rank;
    RootSystem rs;
    rs.family_ = family;
    rs.rank_ = n;
    IntMatrix c = IntMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) c(i, i) = 2;
    auto link = [&](std::size_t i, std::size_t j) {  // 1-based simple edge
        c(i - 1, j - 1) = -1;
        c(j - 1, i - 1) = -1;
    };
    std::vector<int> d(n, 1);
    Rational scale{1};
    switch (family) {
        case Family::A:
            for (std::size_t i = 1; i < n; ++i) link(i, i + 1);
            rs.weyl_order_ = detail::factorial(static_cast<long long>(n) + 1);
            break;
        case Family::B:
            for (std::size_t i = 1; i < n; ++i) link(i, i + 1);
            c(n - 1, n - 2) = -2;  // <alpha_{n-1}, alpha_n^vee>, alpha_n short
            for (std::size_t i = 0; i + 1 < n; ++i) d[i] = 2;
            scale = Rational(1, 2);
            rs.weyl_order_ = (1LL << n) * detail::factorial(static_cast<long long>(n));
            break;
        case Family::C:
            for (std::size_t i = 1; i < n; ++i) link(i, i + 1);
            c(n - 2, n - 1) = -2;  // <alpha_n, alpha_{n-1}^vee>, alpha_n long
            d[n - 1] = 2;
            rs.weyl_order_ = (1LL << n) * detail::factorial(static_cast<long long>(n));
            break;
        case Family::D:
            for (std::size_t i = 1; i + 1 < n; ++i) link(i, i + 1);
            link(n - 2, n);
            rs.weyl_order_ = (1LL << (n - 1)) * detail::factorial(static_cast<long long>(n));
            break;
        case Family::E:
            link(1, 3);
            link(3, 4);
            link(4, 5);
            link(5, 6);
            link(2, 4);
            if (n >= 7) link(6, 7);
            if (n >= 8) link(7, 8);
            rs.weyl_order_ = n == 6 ? 51840LL : n == 7 ? 2903040LL : 696729600LL;
            break;
        case Family::F:
            link(1, 2);
            link(2, 3);
            link(3, 4);
            c(2, 1) = -2;  // <alpha_2, alpha_3^vee>
            d = {2, 2, 1, 1};
            scale = Rational(1, 2);
            rs.weyl_order_ = 1152;
            break;
        case Family::G:
            c(0, 1) = -3;  // <alpha_2, alpha_1^vee>, alpha_1 short
            c(1, 0) = -1;
            d = {1, 3};
            rs.weyl_order_ = 12;
            break;
    }
    rs.cartan_ = c;
    rs.d_ = d;
    rs.scale_ = scale;
    rs.det_ = determinant(c);
    rs.adj_ = adjugate(c);
    rs.roots_ = detail::generate_positive_roots(c, n);
    for (std::size_t j = 0; j < n; ++j) {
        Weight w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = c(i, j);
        rs.simple_w_.push_back(w);
    }
    return rs;
}

/// Parses descriptors such as "C3", "d4", "G2".
inline RootSystem parse_system(const std::string& text) {
    if (text.size() < 2) throw PreconditionError("bad root system descriptor '" + text + "'");
    const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    if (f < 'A' || f > 'G') throw PreconditionError("bad root system family in '" + text + "'");
    std::size_t rank = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw PreconditionError("bad root system rank in '" + text + "'");
        rank = rank * 10 + static_cast<std::size_t>(text[i] - '0');
        if (rank > 100) throw PreconditionError("bad root system rank in '" + text + "'");
    }
    return build(static_cast<Family>(f), rank);
}

inline constexpr long long kDefaultWeylCap = 100000;

namespace detail {

inline WeylElement left_multiply(const RootSystem& rs, const WeylElement& w, std::size_t i) {
    const std::size_t n = rs.rank();
    const IntMatrix& c = rs.cartan();
    WeylElement r;
    r.matrix = w.matrix;
    r.root_matrix = w.root_matrix;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) r.matrix(a, b) -= c(a, i) * w.matrix(i, b);
    for (std::size_t b = 0; b < n; ++b) {
        int s = 0;
        for (std::size_t k = 0; k < n; ++k) s += c(i, k) * w.root_matrix(k, b);
        r.root_matrix(i, b) -= s;
    }
    r.length = w.length + 1;
    r.sign = -w.sign;
    return r;
}

/// Breadth-first closure of the rho-orbit under the given generators.
inline std::vector<WeylElement> orbit_closure(const RootSystem& rs, const std::vector<std::size_t>& gens,
                                              long long cap) {
    const std::size_t n = rs.rank();
    std::vector<WeylElement> out;
    std::unordered_map<Weight, std::size_t, LatticeHash> index;
    WeylElement id{IntMatrix::identity(n), IntMatrix::identity(n), 1, 0};
    const Weight rho = rs.rho();
    out.push_back(id);
    index.emplace(rho, 0);
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (std::size_t i : gens) {
            WeylElement next = left_multiply(rs, out[k], i);
            Weight key = next.matrix.apply(rho);
            if (index.count(key)) continue;
            if (static_cast<long long>(out.size()) >= cap)
                throw CapExceeded("Weyl group of " + rs.name() + " exceeds the cap of " + std::to_string(cap));
            index.emplace(key, out.size());
            out.push_back(std::move(next));
        }
    }
    return out;
}

}  // namespace detail

/// All elements of W, identity first, in breadth-first (nondecreasing length) order.
inline std::vector<WeylElement> weyl_group(const RootSystem& rs, long long cap = kDefaultWeylCap) {
    if (rs.family() == Family::E && rs.rank() > 6)
        throw CapExceeded("E7 and E8 Weyl groups are not supported");
    if (rs.weyl_order() > cap)
        throw CapExceeded("|W(" + rs.name() + ")| = " + std::to_string(rs.weyl_order()) +
                          " exceeds the cap of " + std::to_string(cap));
    std::vector<std::size_t> gens(rs.rank());
    for (std::size_t i = 0; i < gens.size(); ++i) gens[i] = i;
    return detail::orbit_closure(rs, gens, cap);
}

inline Weight act(const WeylElement& w, const Weight& v) { return w.matrix.apply(v); }
inline RootVector act(const WeylElement& w, const RootVector& v) { return w.root_matrix.apply(v); }

inline bool in_levi(LeviMask levi, std::size_t i) { return (levi >> i) & 1u; }

inline LeviMask full_levi(std::size_t rank) { return rank >= 32 ? ~0u : ((1u << rank) - 1u); }

/// Parses a comma-separated list of 1-based node indices ("" is the empty set).
inline LeviMask parse_levi(const std::string& text, std::size_t rank) {
    LeviMask m = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string tok = text.substr(pos, comma - pos);
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char ch) { return std::isspace(ch); }),
                  tok.end());
        if (!tok.empty()) {
            std::size_t used = 0;
            int idx = 0;
            try {
                idx = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw PreconditionError("bad Levi index '" + tok + "'");
            }
            if (used != tok.size() || idx < 1 || static_cast<std::size_t>(idx) > rank)
                throw PreconditionError("Levi index '" + tok + "' out of range 1.." + std::to_string(rank));
            m |= 1u << (idx - 1);
        }
        pos = comma + 1;
    }
    return m;
}

inline std::string levi_to_string(LeviMask levi, std::size_t rank) {
    std::string s;
    for (std::size_t i = 0; i < rank; ++i)
        if (in_levi(levi, i)) {
            if (!s.empty()) s += ",";
            s += std::to_string(i + 1);
        }
    return s;
}

struct ParabolicData {
    LeviMask levi = 0;
    std::vector<RootVector> levi_positive_roots;
    std::vector<RootVector> complement_roots;
    std::vector<WeylElement> levi_weyl;
    Weight rho_bar;
    Weight rho_diamond;

    bool contains(std::size_t i) const { return in_levi(levi, i); }
};

inline bool supported_on(const RootVector& r, LeviMask levi) {
    for (std::size_t j = 0; j < r.size(); ++j)
        if (r[j] != 0 && !in_levi(levi, j)) return false;
    return true;
}

inline ParabolicData parabolic(const RootSystem& rs, LeviMask levi) {
    require((levi & ~full_levi(rs.rank())) == 0, "Levi subset out of range for " + rs.name());
    ParabolicData par;
    par.levi = levi;
    for (const auto& r : rs.positive_roots()) {
        if (supported_on(r, levi))
            par.levi_positive_roots.push_back(r);
        else
            par.complement_roots.push_back(r);
    }
    std::vector<std::size_t> gens;
    for (std::size_t i = 0; i < rs.rank(); ++i)
        if (in_levi(levi, i)) gens.push_back(i);
    par.levi_weyl = detail::orbit_closure(rs, gens, kDefaultWeylCap);
    par.rho_bar = Weight(rs.rank());
    par.rho_diamond = Weight(rs.rank());
    for (std::size_t i = 0; i < rs.rank(); ++i) (in_levi(levi, i) ? par.rho_bar : par.rho_diamond)[i] = 1;
    return par;
}

/// Coordinate split v = v_bar + v_diamond along the fundamental weights inside / outside the Levi.
inline std::pair<Weight, Weight> decompose_diamond(const ParabolicData& par, const Weight& v) {
    Weight bar = v, dia = v;
    for (std::size_t i = 0; i < v.size(); ++i) (par.contains(i) ? dia : bar)[i] = 0;
    return {bar, dia};
}

inline bool is_levi_dominant(const ParabolicData& par, const Weight& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (par.contains(i) && v[i] < 0) return false;
    return true;
}

/// True iff every element of the Levi Weyl group permutes the complement roots.
inline bool check_complement_stability(const ParabolicData& par) {
    std::unordered_set<RootVector, LatticeHash> comp(par.complement_roots.begin(), par.complement_roots.end());
    for (const auto& w : par.levi_weyl) {
        std::unordered_set<RootVector, LatticeHash> image;
        for (const auto& a : par.complement_roots) image.insert(act(w, a));
        if (image != comp) return false;
    }
    return true;
}

struct DominantConjugate {
    Weight weight;
    int sign = 1;  ///< sign of the Weyl element used
};

/// Moves v into the dominant chamber (restricted to the nodes in `nodes`) by simple reflections.
inline DominantConjugate dominant_conjugate(const RootSystem& rs, Weight v, LeviMask nodes) {
    int sign = 1;
    bool moved = true;
    while (moved) {
        moved = false;
        for (std::size_t i = 0; i < rs.rank(); ++i)
            if (in_levi(nodes, i) && v[i] < 0) {
                v = rs.reflect(v, i);
                sign = -sign;
                moved = true;
            }
    }
    return {v, sign};
}

inline Weight dominant_conjugate(const RootSystem& rs, const Weight& v) {
    return dominant_conjugate(rs, v, full_levi(rs.rank())).weight;
}

}  // namespace weylpq
