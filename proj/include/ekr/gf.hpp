#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ekr/face.hpp"

namespace ekr {

/// Deterministic 64-bit generator (splitmix64).  A value type: identical
/// seeds always reproduce identical streams, independent of platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw from [0, bound) by rejection sampling.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
        std::uint64_t r;
        do { r = next(); } while (r > limit);
        return r % bound;
    }

private:
    std::uint64_t state_;
};

inline std::uint64_t mix64(std::uint64_t x) { return SplitMix64(x).next(); }

/// Arithmetic in the prime field GF(p).  The modulus is verified prime on
/// construction; products of two reduced values must fit in 64 bits, which
/// caps p below 2^32.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p >= (std::uint64_t{1} << 32)) throw input_error("prime modulus must be < 2^32");
        if (!is_prime(p)) throw input_error("modulus " + std::to_string(p) + " is not prime");
    }

    std::uint64_t modulus() const { return p_; }

    std::uint64_t reduce(std::uint64_t x) const { return x % p_; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p_; }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    std::uint64_t inv(std::uint64_t a) const {
        if (a == 0) throw domain_error("inverse of zero");
        std::int64_t t = 0, newt = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), newr = static_cast<std::int64_t>(a);
        while (newr != 0) {
            std::int64_t q = r / newr;
            t = std::exchange(newt, t - q * newt);
            r = std::exchange(newr, r - q * newr);
        }
        return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p_) : t);
    }

    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    std::uint64_t p_;
};

/// Dense row-major matrix over GF(p); entries stored reduced.
struct GfMatrix {
    GfMatrix(const PrimeField& f, int r, int c)
        : field(f), rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {}

    std::uint64_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)]; }
    std::uint64_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)]; }

    GfMatrix transposed() const {
        GfMatrix t(field, cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    PrimeField field;
    int rows, cols;
    std::vector<std::uint64_t> a;
};

/// Rank by Gaussian elimination, pivoting on the first nonzero entry of
/// each column.
inline int gf_rank(GfMatrix m) {
    const PrimeField& f = m.field;
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < m.rows; ++i)
            if (m.at(i, col) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = col; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
        std::uint64_t ipiv = f.inv(m.at(rank, col));
        for (int i = rank + 1; i < m.rows; ++i) {
            std::uint64_t factor = f.mul(m.at(i, col), ipiv);
            if (factor == 0) continue;
            for (int j = col; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

/// Incremental column basis: feed columns left to right, keeping exactly
/// those outside the span of the previously kept ones.
class GreedyColumnBasis {
public:
    explicit GreedyColumnBasis(const PrimeField& f, int rows) : field_(f), rows_(rows) {}

    int rank() const { return static_cast<int>(basis_.size()); }

    /// Returns true (and absorbs the column) iff it enlarges the span.
    bool offer(std::vector<std::uint64_t> col) {
        for (std::size_t b = 0; b < basis_.size(); ++b) {
            std::uint64_t x = col[static_cast<std::size_t>(pivot_[b])];
            if (x == 0) continue;
            std::uint64_t factor = field_.mul(x, ipivot_[b]);
            for (int i = 0; i < rows_; ++i)
                col[static_cast<std::size_t>(i)] =
                    field_.sub(col[static_cast<std::size_t>(i)], field_.mul(factor, basis_[b][static_cast<std::size_t>(i)]));
        }
        for (int i = 0; i < rows_; ++i) {
            if (col[static_cast<std::size_t>(i)] != 0) {
                pivot_.push_back(i);
                ipivot_.push_back(field_.inv(col[static_cast<std::size_t>(i)]));
                basis_.push_back(std::move(col));
                return true;
            }
        }
        return false;
    }

private:
    PrimeField field_;
    int rows_;
    std::vector<std::vector<std::uint64_t>> basis_;
    std::vector<int> pivot_;
    std::vector<std::uint64_t> ipivot_;
};

/// Columns not in the span of strictly earlier columns; equals the pivot
/// columns of the reduced row-echelon form, and |result| = rank.
inline std::vector<int> greedy_pivot_columns(const GfMatrix& m) {
    GreedyColumnBasis basis(m.field, m.rows);
    std::vector<int> picked;
    for (int j = 0; j < m.cols; ++j) {
        std::vector<std::uint64_t> col(static_cast<std::size_t>(m.rows));
        for (int i = 0; i < m.rows; ++i) col[static_cast<std::size_t>(i)] = m.at(i, j);
        if (basis.offer(std::move(col))) picked.push_back(j);
    }
    return picked;
}

/// Determinant of the square submatrix with the given row and column sets
/// (1-based, as faces), by elimination.
inline std::uint64_t minor_det(const GfMatrix& g, Face rowset, Face colset) {
    if (rowset.card() != colset.card()) throw domain_error("minor of a non-square submatrix");
    auto rs = rowset.vertices();
    auto cs = colset.vertices();
    int k = static_cast<int>(rs.size());
    if (k == 0) return 1 % g.field.modulus();
    if (rs.back() > g.rows || cs.back() > g.cols) throw domain_error("minor index out of range");

    const PrimeField& f = g.field;
    GfMatrix sub(f, k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            sub.at(i, j) = g.at(rs[static_cast<std::size_t>(i)] - 1, cs[static_cast<std::size_t>(j)] - 1);

    std::uint64_t det = 1 % f.modulus();
    for (int col = 0; col < k; ++col) {
        int pivot = -1;
        for (int i = col; i < k; ++i)
            if (sub.at(i, col) != 0) { pivot = i; break; }
        if (pivot < 0) return 0;
        if (pivot != col) {
            for (int j = col; j < k; ++j) std::swap(sub.at(pivot, j), sub.at(col, j));
            det = f.neg(det);
        }
        det = f.mul(det, sub.at(col, col));
        std::uint64_t ipiv = f.inv(sub.at(col, col));
        for (int i = col + 1; i < k; ++i) {
            std::uint64_t factor = f.mul(sub.at(i, col), ipiv);
            if (factor == 0) continue;
            for (int j = col; j < k; ++j)
                sub.at(i, j) = f.sub(sub.at(i, j), f.mul(factor, sub.at(col, j)));
        }
    }
    return det;
}

/// Seeded uniform random matrix; the same (seed, p, dims) always yields the
/// same entries.
inline GfMatrix random_matrix(const PrimeField& f, int rows, int cols, std::uint64_t seed) {
    GfMatrix m(f, rows, cols);
    SplitMix64 rng(seed);
    for (auto& x : m.a) x = rng.below(f.modulus());
    return m;
}

} // namespace ekr
