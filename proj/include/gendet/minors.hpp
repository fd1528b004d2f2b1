#pragma once

/*
 * Enumeration of maximal minors.
 *
 * A tall m x n matrix has C(m,n) maximal square submatrices, one per
 * ascending row combination. All four generalized determinants are sums
 * over their determinants, so this is the shared hot loop: walk the
 * combinations lexicographically, evaluate each n x n determinant in a
 * reused scratch block, hand (rows, value) to the caller.
 *
 * The walk is guarded by a configurable cap on C(m,n); the default keeps
 * accidental exponential blowups from looking like hangs.
 */

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "gendet/combinatorics.hpp"
#include "gendet/determinant.hpp"
#include "gendet/errors.hpp"
#include "gendet/scalar.hpp"

namespace gendet {

inline constexpr std::uint64_t kDefaultMinorCap = 10'000'000;

namespace detail {

template <typename Derived>
void require_tall(const Eigen::MatrixBase<Derived>& a, const char* what) {
    if (a.rows() < 1 || a.cols() < 1)
        throw DimensionError(std::string(what) + ": empty matrix");
    if (a.rows() < a.cols())
        throw DimensionError(std::string(what) + " requires a tall matrix (rows >= cols), got " +
                             std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

inline void require_under_cap(int m, int n, std::uint64_t cap) {
    const std::uint64_t count = binomial(m, n);
    if (count > cap) throw MinorCapError(count, cap);
}

} // namespace detail

/// Visits det A_{i1..in} for every ascending row combination, in
/// lexicographic order: f(rows, value) with rows the 0-based tuple.
/// Returns the number of minors visited (always C(m,n)).
template <typename Derived, typename Visitor>
std::uint64_t for_each_maximal_minor(const Eigen::MatrixBase<Derived>& a,
                                     std::uint64_t max_minors, Visitor&& f) {
    using S = typename Derived::Scalar;
    detail::require_tall(a, "minor enumeration");

    const int m = static_cast<int>(a.rows());
    const int n = static_cast<int>(a.cols());
    detail::require_under_cap(m, n, max_minors);

    const auto& mat = a.derived();
    MatrixX<S> scratch(n, n);
    CombinationCursor cursor(m, n);
    std::uint64_t visited = 0;
    do {
        const std::vector<int>& rows = cursor.current();
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                scratch(r, c) = mat(rows[static_cast<std::size_t>(r)], c);
        f(rows, det(scratch));
        ++visited;
    } while (cursor.advance());
    return visited;
}

/// All maximal-minor determinants of a tall matrix, keyed by their row
/// combinations in lexicographic (tau) order.
template <typename S>
struct MinorTable {
    Index rows = 0;
    Index cols = 0;
    std::vector<std::pair<Combination, S>> entries;
};

template <typename Derived>
MinorTable<typename Derived::Scalar> minor_table(const Eigen::MatrixBase<Derived>& a,
                                                 std::uint64_t max_minors = kDefaultMinorCap) {
    using S = typename Derived::Scalar;
    MinorTable<S> table;
    table.rows = a.rows();
    table.cols = a.cols();
    const int m = static_cast<int>(a.rows());
    const std::uint64_t count = binomial(m, static_cast<int>(a.cols()));
    if (count <= max_minors) table.entries.reserve(static_cast<std::size_t>(count));
    for_each_maximal_minor(a, max_minors, [&](const std::vector<int>& rows, const S& value) {
        table.entries.emplace_back(Combination(rows, m), value);
    });
    return table;
}

} // namespace gendet
