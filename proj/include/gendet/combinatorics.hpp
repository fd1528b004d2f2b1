#pragma once

/*
 * Ascending row combinations and the lexicographic bijection tau.
 *
 * Every sum over maximal minors in this library runs over the strictly
 * ascending n-tuples of row indices in lexicographic order, and every
 * coefficient vector is indexed by the lexicographic rank of its tuple.
 * Fixing tau = lex rank once, here, keeps all modules mutually consistent.
 *
 * Indices are 0-based internally; formatted output and the from_one_based
 * entry point speak the conventional 1-based language.
 */

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "gendet/errors.hpp"
#include "gendet/scalar.hpp"

namespace gendet {

inline constexpr std::uint64_t kBinomialSaturated = std::numeric_limits<std::uint64_t>::max();

/// C(m, n), saturating at kBinomialSaturated instead of overflowing.
/// Returns 0 when n < 0 or n > m.
inline std::uint64_t binomial(int m, int n) noexcept {
    if (n < 0 || n > m) return 0;
    if (n > m - n) n = m - n;
    std::uint64_t result = 1;
    for (int i = 1; i <= n; ++i) {
        std::uint64_t factor = static_cast<std::uint64_t>(m - n + i);
        std::uint64_t divisor = static_cast<std::uint64_t>(i);
        // result * factor / i is exact, so after cancelling gcd(factor, i)
        // the rest of i divides result; dividing first keeps the running
        // value equal to C(m-n+i, i), which fits whenever C(m, n) does.
        const std::uint64_t shared = std::gcd(factor, divisor);
        factor /= shared;
        divisor /= shared;
        result /= divisor;
        if (result > kBinomialSaturated / factor) return kBinomialSaturated;
        result *= factor;
    }
    return result;
}

/// A strictly ascending tuple of n row indices drawn from {0, ..., m-1}.
class Combination {
public:
    Combination(std::vector<int> indices, int ambient)
        : indices_(std::move(indices)), ambient_(ambient) {
        validate();
    }

    static Combination from_one_based(std::vector<int> indices, int ambient) {
        for (int& i : indices) --i;
        return Combination(std::move(indices), ambient);
    }

    int size() const { return static_cast<int>(indices_.size()); }
    int ambient() const { return ambient_; }
    int operator[](int j) const { return indices_[static_cast<std::size_t>(j)]; }
    const std::vector<int>& indices() const { return indices_; }

    std::vector<int> one_based() const {
        std::vector<int> out = indices_;
        for (int& i : out) ++i;
        return out;
    }

    friend bool operator==(const Combination&, const Combination&) = default;

private:
    void validate() const {
        if (indices_.empty())
            throw DimensionError("combination must select at least one index");
        if (ambient_ < static_cast<int>(indices_.size()))
            throw DimensionError("combination larger than its ambient set");
        int prev = -1;
        for (int i : indices_) {
            if (i <= prev || i < 0 || i >= ambient_)
                throw DimensionError("combination indices must be strictly ascending and in range");
            prev = i;
        }
    }

    std::vector<int> indices_;
    int ambient_;
};

/// Prints 1-based: "(1,3,4)".
inline std::ostream& operator<<(std::ostream& os, const Combination& c) {
    os << '(';
    for (int j = 0; j < c.size(); ++j) {
        if (j > 0) os << ',';
        os << c[j] + 1;
    }
    return os << ')';
}

inline std::string to_string(const Combination& c) {
    std::string s = "(";
    for (int j = 0; j < c.size(); ++j) {
        if (j > 0) s += ',';
        s += std::to_string(c[j] + 1);
    }
    s += ')';
    return s;
}

/// In-place lexicographic walk over all C(m,n) ascending n-tuples.
/// Allocation-free after construction; the workhorse behind every
/// minor enumeration.
class CombinationCursor {
public:
    CombinationCursor(int m, int n) : m_(m), n_(n) {
        if (n < 1 || n > m)
            throw DimensionError("combinations require 1 <= n <= m, got n = " +
                                 std::to_string(n) + ", m = " + std::to_string(m));
        current_.resize(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) current_[static_cast<std::size_t>(j)] = j;
    }

    const std::vector<int>& current() const { return current_; }
    std::uint64_t count() const { return binomial(m_, n_); }

    /// Steps to the next tuple; false once the walk is exhausted.
    bool advance() {
        int i = n_ - 1;
        while (i >= 0 && current_[static_cast<std::size_t>(i)] == m_ - n_ + i) --i;
        if (i < 0) return false;
        ++current_[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n_; ++j)
            current_[static_cast<std::size_t>(j)] = current_[static_cast<std::size_t>(i)] + (j - i);
        return true;
    }

private:
    int m_;
    int n_;
    std::vector<int> current_;
};

/// All C(m,n) combinations, materialized in lexicographic order.
/// Intended for small shapes; large sweeps should walk a cursor instead.
inline std::vector<Combination> enumerate_combinations(int m, int n) {
    CombinationCursor cursor(m, n);
    std::vector<Combination> out;
    out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(cursor.count(), 1u << 20)));
    do {
        out.emplace_back(cursor.current(), m);
    } while (cursor.advance());
    return out;
}

/// Lexicographic rank of an ascending 0-based tuple within C(ambient, n).
inline std::uint64_t tau_rank(std::span<const int> indices, int ambient) {
    const int n = static_cast<int>(indices.size());
    std::uint64_t rank = 0;
    int prev = -1;
    for (int j = 0; j < n; ++j) {
        for (int skipped = prev + 1; skipped < indices[static_cast<std::size_t>(j)]; ++skipped)
            rank += binomial(ambient - 1 - skipped, n - 1 - j);
        prev = indices[static_cast<std::size_t>(j)];
    }
    return rank;
}

inline std::uint64_t tau_rank(const Combination& c) {
    return tau_rank(std::span<const int>(c.indices()), c.ambient());
}

/// Inverse of tau_rank.
inline Combination tau_unrank(std::uint64_t rank, int m, int n) {
    if (n < 1 || n > m)
        throw DimensionError("tau_unrank requires 1 <= n <= m");
    if (rank >= binomial(m, n))
        throw DimensionError("tau rank out of range");
    std::vector<int> indices(static_cast<std::size_t>(n));
    int next = 0;
    for (int j = 0; j < n; ++j) {
        for (int candidate = next;; ++candidate) {
            const std::uint64_t below = binomial(m - 1 - candidate, n - 1 - j);
            if (rank < below) {
                indices[static_cast<std::size_t>(j)] = candidate;
                next = candidate + 1;
                break;
            }
            rank -= below;
        }
    }
    return Combination(std::move(indices), m);
}

/// The Laplace sign of a row combination: with 1-based rows i_j and slots j
/// this is (-1)^(sum_j i_j + j); the 0-based parity below is identical.
inline int laplace_sign(std::span<const int> indices) {
    int parity = 0;
    for (int j = 0; j < static_cast<int>(indices.size()); ++j)
        parity += indices[static_cast<std::size_t>(j)] + j;
    return (parity & 1) ? -1 : 1;
}

inline int laplace_sign(const Combination& c) {
    return laplace_sign(std::span<const int>(c.indices()));
}

/// The |rowset| x |colset| submatrix of selected rows and columns,
/// relative order preserved.
template <typename Derived>
MatrixX<typename Derived::Scalar> submatrix(const Eigen::MatrixBase<Derived>& a,
                                            const Combination& rowset,
                                            const Combination& colset) {
    if (rowset.ambient() != a.rows() || colset.ambient() != a.cols())
        throw DimensionError("submatrix selection does not match matrix shape");
    MatrixX<typename Derived::Scalar> out(rowset.size(), colset.size());
    for (int r = 0; r < rowset.size(); ++r)
        for (int c = 0; c < colset.size(); ++c)
            out(r, c) = a.derived()(rowset[r], colset[c]);
    return out;
}

} // namespace gendet
