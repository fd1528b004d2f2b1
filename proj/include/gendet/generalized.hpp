#pragma once

/*
 * The generalized determinants of a tall m x n matrix.
 *
 * All four are functions of the same C(m,n) maximal minors det A_{i1..in}:
 *
 *   detl  — sqrt( sum of squared minors ), the unsigned n-volume of the
 *           image of the unit n-cube. In the exact domain the square
 *           detl^2 is the representable quantity; the root is taken only
 *           when reporting a double. Wide input is 0 by convention (a map
 *           into fewer dimensions flattens every n-volume).
 *   vdet  — the vector of minors themselves, indexed by tau: the
 *           coefficient vector of the wedge product of the columns.
 *   gdet  — the Laplace-signed sum of minors, equivalently defined by
 *           first-column expansion from the alternating-sum base case
 *           (see gdet_recursive, which evaluates that definition
 *           directly and serves as the cross-check).
 *   tdet  — the plain unsigned-weight sum of minors.
 *
 * Speed: the minor enumeration costs C(m,n) small determinants. For detl
 * on doubles there is a Gram shortcut, detl_gram = sqrt(det(A^T A)), at
 * O(mn^2 + n^3); detl_adaptive switches to it above the minor cap.
 * vdet/gdet/tdet need every minor individually and have no such fallback.
 *
 * TODO: a shared expansion cache across row combinations (minors of
 * adjacent combinations overlap in n-1 rows) — measure against the
 * per-minor eliminator before adopting.
 */

#include <cmath>
#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include <Eigen/Core>

#include "gendet/combinatorics.hpp"
#include "gendet/determinant.hpp"
#include "gendet/errors.hpp"
#include "gendet/minors.hpp"
#include "gendet/multivector.hpp"
#include "gendet/scalar.hpp"
#include "gendet/summation.hpp"

namespace gendet {

/// detl squared: the sum of squared maximal minors. Exact in the exact
/// domain; compensated lexicographic summation in the float domain.
/// Wide matrices return 0. The overload with `minors_visited` reports how
/// many minors the enumeration touched.
template <typename Derived>
typename Derived::Scalar detl_squared(const Eigen::MatrixBase<Derived>& a,
                                      std::uint64_t max_minors,
                                      std::uint64_t& minors_visited) {
    using S = typename Derived::Scalar;
    minors_visited = 0;
    if (a.rows() < 1 || a.cols() < 1) throw DimensionError("detl: empty matrix");
    if (a.rows() < a.cols()) return S(0);
    Accumulator<S> acc;
    minors_visited = for_each_maximal_minor(
        a, max_minors, [&](const std::vector<int>&, const S& minor) { acc.add(minor * minor); });
    return acc.value();
}

template <typename Derived>
typename Derived::Scalar detl_squared(const Eigen::MatrixBase<Derived>& a,
                                      std::uint64_t max_minors = kDefaultMinorCap) {
    std::uint64_t ignored = 0;
    return detl_squared(a, max_minors, ignored);
}

/// detl as a double: the root of detl_squared. This is the reporting form
/// for both domains; exact callers keep detl_squared for identities.
template <typename Derived>
double detl(const Eigen::MatrixBase<Derived>& a, std::uint64_t max_minors = kDefaultMinorCap) {
    return std::sqrt(to_double(detl_squared(a, max_minors)));
}

/// Gram-path detl for doubles: sqrt(det(A^T A)), O(mn^2 + n^3), no minor
/// enumeration. det(A^T A) is nonnegative up to rounding; values in
/// (-tolerance * hadamard_bound, 0) clamp to zero, anything more negative
/// is a NumericError.
template <typename Derived>
double detl_gram(const Eigen::MatrixBase<Derived>& a, double tolerance = 1e-9) {
    static_assert(std::is_same_v<typename Derived::Scalar, double>,
                  "detl_gram is the float-domain fast path");
    detail::require_tall(a, "detl_gram");
    detail::require_finite(a, "detl_gram");

    const Eigen::MatrixXd gram = a.derived().transpose() * a.derived();
    const double g = det_float(gram);

    double hadamard = 1.0; // prod of column norms^2 bounds |det(A^T A)|
    for (Index j = 0; j < gram.cols(); ++j) hadamard *= gram(j, j);
    const double slack = tolerance * std::max(hadamard, 1e-300);
    if (g < -slack)
        throw NumericError("detl_gram: det(A^T A) = " + std::to_string(g) +
                           " is negative beyond tolerance");
    return std::sqrt(std::max(g, 0.0));
}

enum class DetlPath { Minors, Gram };

struct DetlOutcome {
    double value = 0.0;
    DetlPath path = DetlPath::Minors;
};

/// Float-domain detl that enumerates minors while C(m,n) fits the cap and
/// silently switches to the Gram path above it, flagging which route ran.
template <typename Derived>
DetlOutcome detl_adaptive(const Eigen::MatrixBase<Derived>& a,
                          std::uint64_t max_minors = kDefaultMinorCap,
                          double tolerance = 1e-9) {
    static_assert(std::is_same_v<typename Derived::Scalar, double>,
                  "detl_adaptive is the float-domain entry point");
    if (a.rows() < 1 || a.cols() < 1) throw DimensionError("detl: empty matrix");
    if (a.rows() < a.cols()) return {0.0, DetlPath::Minors};
    const std::uint64_t count = binomial(static_cast<int>(a.rows()), static_cast<int>(a.cols()));
    if (count > max_minors) return {detl_gram(a, tolerance), DetlPath::Gram};
    return {detl(a, max_minors), DetlPath::Minors};
}

/// The vector determinant: minor det A_c at blade rank tau(c). The wedge
/// product of the columns, read off as a multivector.
template <typename Derived>
Multivector<typename Derived::Scalar> vdet(const Eigen::MatrixBase<Derived>& a,
                                           std::uint64_t max_minors = kDefaultMinorCap) {
    using S = typename Derived::Scalar;
    detail::require_tall(a, "vdet");
    Multivector<S> out(static_cast<int>(a.rows()), static_cast<int>(a.cols()));
    std::uint64_t rank = 0; // lexicographic visit order == tau order
    for_each_maximal_minor(a, max_minors,
                           [&](const std::vector<int>&, const S& minor) { out[rank++] = minor; });
    return out;
}

/// The g-determinant in closed form: Laplace-signed sum of maximal minors.
template <typename Derived>
typename Derived::Scalar gdet(const Eigen::MatrixBase<Derived>& a,
                              std::uint64_t max_minors = kDefaultMinorCap) {
    using S = typename Derived::Scalar;
    detail::require_tall(a, "gdet");
    Accumulator<S> acc;
    for_each_maximal_minor(a, max_minors, [&](const std::vector<int>& rows, const S& minor) {
        acc.add(laplace_sign(rows) > 0 ? minor : -minor);
    });
    return acc.value();
}

namespace detail {

template <typename S, typename Mat>
S gdet_expand(const Mat& m, std::vector<int>& live_rows, int col, int total_cols) {
    if (col == total_cols - 1) {
        // Base case: the alternating sum a1 - a2 + ... +- am of a column.
        S acc(0);
        for (std::size_t i = 0; i < live_rows.size(); ++i) {
            const S& v = m(live_rows[i], col);
            acc += (i % 2 == 0) ? v : -v;
        }
        return acc;
    }
    S acc(0);
    for (std::size_t i = 0; i < live_rows.size(); ++i) {
        const S lead = m(live_rows[i], col);
        if (lead == S(0)) continue;
        const int removed = live_rows[i];
        live_rows.erase(live_rows.begin() + static_cast<std::ptrdiff_t>(i));
        const S sub = gdet_expand<S>(m, live_rows, col + 1, total_cols);
        live_rows.insert(live_rows.begin() + static_cast<std::ptrdiff_t>(i), removed);
        const S term = lead * sub;
        acc += (i % 2 == 0) ? term : -term;
    }
    return acc;
}

} // namespace detail

/// The g-determinant by its defining recursion: first-column Laplace
/// expansion down to the alternating-sum base case. Exponential; meant as
/// the independent cross-check for gdet at oracle scale.
template <typename Derived>
typename Derived::Scalar gdet_recursive(const Eigen::MatrixBase<Derived>& a) {
    using S = typename Derived::Scalar;
    detail::require_tall(a, "gdet_recursive");
    std::vector<int> rows(static_cast<std::size_t>(a.rows()));
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) rows[static_cast<std::size_t>(i)] = i;
    return detail::gdet_expand<S>(a.derived(), rows, 0, static_cast<int>(a.cols()));
}

/// The sum-determinant: the unweighted sum of maximal minors.
template <typename Derived>
typename Derived::Scalar tdet(const Eigen::MatrixBase<Derived>& a,
                              std::uint64_t max_minors = kDefaultMinorCap) {
    using S = typename Derived::Scalar;
    detail::require_tall(a, "tdet");
    Accumulator<S> acc;
    for_each_maximal_minor(a, max_minors,
                           [&](const std::vector<int>&, const S& minor) { acc.add(minor); });
    return acc.value();
}

} // namespace gendet
