#pragma once

/**
 * @file lattice.hpp
 * @brief Fixed-capacity integer coordinate vectors with a phantom tag.
 *
 * Weights (fundamental-weight coordinates) and root vectors (simple-root
 * coordinates) share the same storage but are distinct types, so the two
 * coordinate systems cannot be mixed without an explicit conversion.
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylpq {

inline constexpr std::size_t kMaxRank = 8;

template <class Tag>
class Lattice {
public:
    Lattice() = default;
    explicit Lattice(std::size_t n) : n_(checked(n)) {}
    Lattice(std::initializer_list<int> xs) : n_(checked(xs.size())) {
        std::copy(xs.begin(), xs.end(), v_.begin());
    }
    explicit Lattice(const std::vector<int>& xs) : n_(checked(xs.size())) {
        std::copy(xs.begin(), xs.end(), v_.begin());
    }

    static Lattice unit(std::size_t n, std::size_t i) {
        Lattice r(n);
        r.v_[i] = 1;
        return r;
    }

    std::size_t size() const { return n_; }
    int operator[](std::size_t i) const { return v_[i]; }
    int& operator[](std::size_t i) { return v_[i]; }
    const int* begin() const { return v_.data(); }
    const int* end() const { return v_.data() + n_; }
    int* begin() { return v_.data(); }
    int* end() { return v_.data() + n_; }

    std::vector<int> to_vector() const { return {begin(), end()}; }

    bool is_zero() const { return std::all_of(begin(), end(), [](int x) { return x == 0; }); }
    bool nonnegative() const { return std::all_of(begin(), end(), [](int x) { return x >= 0; }); }
    long long sum() const { return std::accumulate(begin(), end(), 0LL); }

    Lattice& operator+=(const Lattice& o) {
        for (std::size_t i = 0; i < n_; ++i) v_[i] += o.v_[i];
        return *this;
    }
    Lattice& operator-=(const Lattice& o) {
        for (std::size_t i = 0; i < n_; ++i) v_[i] -= o.v_[i];
        return *this;
    }
    friend Lattice operator+(Lattice a, const Lattice& b) { return a += b; }
    friend Lattice operator-(Lattice a, const Lattice& b) { return a -= b; }
    friend Lattice operator-(Lattice a) {
        for (auto& x : a) x = -x;
        return a;
    }
    friend Lattice operator*(int k, Lattice a) {
        for (auto& x : a) x *= k;
        return a;
    }

    bool operator==(const Lattice& o) const {
        return n_ == o.n_ && std::equal(begin(), end(), o.begin());
    }
    bool operator!=(const Lattice& o) const { return !(*this == o); }
    /// Lexicographic; used only for deterministic ordering of containers.
    bool operator<(const Lattice& o) const {
        return std::lexicographical_compare(begin(), end(), o.begin(), o.end());
    }

    /// Coordinatewise comparison a <= b.
    bool below(const Lattice& o) const {
        for (std::size_t i = 0; i < n_; ++i)
            if (v_[i] > o.v_[i]) return false;
        return true;
    }

    std::size_t hash() const {
        std::uint64_t h = 1469598103934665603ULL ^ n_;
        for (std::size_t i = 0; i < n_; ++i) {
            h ^= static_cast<std::uint32_t>(v_[i]);
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < n_; ++i) {
            if (i) s += ",";
            s += std::to_string(v_[i]);
        }
        return s + ")";
    }

private:
    std::array<int, kMaxRank> v_{};
    std::uint8_t n_ = 0;

    static std::uint8_t checked(std::size_t n) {
        if (n > kMaxRank) throw std::invalid_argument("rank exceeds the supported maximum of 8");
        return static_cast<std::uint8_t>(n);
    }
};

template <class Tag>
std::ostream& operator<<(std::ostream& os, const Lattice<Tag>& v) {
    return os << v.str();
}

/// Fundamental-weight coordinates (<v, alpha_i^vee>)_i.
using Weight = Lattice<struct WeightTag>;
/// Coefficients on the simple roots.
using RootVector = Lattice<struct RootTag>;

struct LatticeHash {
    template <class Tag>
    std::size_t operator()(const Lattice<Tag>& v) const {
        return v.hash();
    }
};

}  // namespace weylpq
