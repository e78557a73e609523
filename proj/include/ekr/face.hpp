#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ekr/errors.hpp"

namespace ekr {

/// A face: an immutable set of 1-based vertex indices, stored as a 64-bit
/// mask (vertex v <-> bit v-1).  The empty face is a legal value.
class Face {
public:
    static constexpr int max_vertices = 64;

    constexpr Face() = default;

    static constexpr Face from_mask(std::uint64_t m) { return Face(m); }

    static Face of(std::span<const int> vertices) {
        std::uint64_t m = 0;
        for (int v : vertices) {
            if (v < 1) throw input_error("vertex index must be >= 1, got " + std::to_string(v));
            if (v > max_vertices) throw input_error("vertex index exceeds " + std::to_string(max_vertices));
            m |= std::uint64_t{1} << (v - 1);
        }
        return Face(m);
    }

    static Face of(std::initializer_list<int> vertices) {
        return of(std::span<const int>(vertices.begin(), vertices.size()));
    }

    static Face singleton(int v) { return of({v}); }

    constexpr std::uint64_t mask() const { return bits_; }
    constexpr int card() const { return std::popcount(bits_); }
    constexpr int dim() const { return card() - 1; }
    constexpr bool empty() const { return bits_ == 0; }

    constexpr bool contains(int v) const { return (bits_ >> (v - 1)) & 1; }
    constexpr bool subset_of(Face other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(Face other) const { return (bits_ & other.bits_) != 0; }
    constexpr int intersection_card(Face other) const { return std::popcount(bits_ & other.bits_); }

    constexpr Face unite(Face other) const { return Face(bits_ | other.bits_); }
    constexpr Face intersect(Face other) const { return Face(bits_ & other.bits_); }
    constexpr Face minus(Face other) const { return Face(bits_ & ~other.bits_); }
    constexpr Face with(int v) const { return Face(bits_ | (std::uint64_t{1} << (v - 1))); }
    constexpr Face without(int v) const { return Face(bits_ & ~(std::uint64_t{1} << (v - 1))); }

    /// Smallest vertex, or 0 when empty.
    constexpr int min_vertex() const { return bits_ ? std::countr_zero(bits_) + 1 : 0; }
    /// Largest vertex, or 0 when empty.
    constexpr int max_vertex() const { return bits_ ? 64 - std::countl_zero(bits_) : 0; }

    std::vector<int> vertices() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(card()));
        for (std::uint64_t m = bits_; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
        return out;
    }

    /// Vertices as whitespace-separated 1-based indices; the empty face prints "0".
    std::string to_string() const {
        if (bits_ == 0) return "0";
        std::string s;
        for (std::uint64_t m = bits_; m; m &= m - 1) {
            if (!s.empty()) s += ' ';
            s += std::to_string(std::countr_zero(m) + 1);
        }
        return s;
    }

    friend constexpr bool operator==(Face a, Face b) = default;

private:
    constexpr explicit Face(std::uint64_t m) : bits_(m) {}
    std::uint64_t bits_ = 0;
};

/// Lexicographic order on the increasing vertex sequences:
/// {1,2} < {1,3} < {1,4} < {2} < {2,3}.  A proper prefix sorts first.
inline bool seq_lex_less(Face a, Face b) {
    std::uint64_t x = a.mask(), y = b.mask();
    while (x && y) {
        int va = std::countr_zero(x), vb = std::countr_zero(y);
        if (va != vb) return va < vb;
        x &= x - 1;
        y &= y - 1;
    }
    return !x && y;
}

/// Cardinality first, then sequence-lexicographic: the canonical order used
/// when iterating the faces of a complex.
inline bool card_lex_less(Face a, Face b) {
    if (a.card() != b.card()) return a.card() < b.card();
    return seq_lex_less(a, b);
}

inline long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Enumerates the r-subsets of {1,...,n} in sequence-lexicographic order.
class CombinationIter {
public:
    CombinationIter(int n, int r) : n_(n), r_(r), done_(r > n || r < 0) {
        idx_.resize(static_cast<std::size_t>(std::max(r, 0)));
        for (int i = 0; i < r; ++i) idx_[static_cast<std::size_t>(i)] = i + 1;
    }

    bool done() const { return done_; }

    Face current() const {
        std::uint64_t m = 0;
        for (int v : idx_) m |= std::uint64_t{1} << (v - 1);
        return Face::from_mask(m);
    }

    void advance() {
        if (r_ == 0) { done_ = true; return; }
        int i = r_ - 1;
        while (i >= 0 && idx_[static_cast<std::size_t>(i)] == n_ - (r_ - 1 - i)) --i;
        if (i < 0) { done_ = true; return; }
        ++idx_[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < r_; ++j)
            idx_[static_cast<std::size_t>(j)] = idx_[static_cast<std::size_t>(j - 1)] + 1;
    }

private:
    int n_, r_;
    bool done_;
    std::vector<int> idx_;
};

} // namespace ekr
