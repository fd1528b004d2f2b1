#pragma once

/*
 * Square determinant engines.
 *
 * det_exact    — fraction-free (Bareiss) elimination for exact scalars.
 *                Every intermediate entry is itself a minor of the input,
 *                so integer matrices stay integral and rational entries
 *                never leave the field. Bit-exact.
 * det_float    — partially pivoted Gaussian elimination for doubles.
 *                Pivot = largest absolute value in the column, ties broken
 *                by lowest row index, so results are run-to-run identical.
 *                Accuracy is bounded by conditioning, not guaranteed.
 * det_cofactor — first-column cofactor expansion, capped at 7x7. O(n!),
 *                intentionally naive; exists purely as an independent
 *                cross-check for the eliminators.
 */

#include <cmath>
#include <string>
#include <type_traits>
#include <vector>

#include <Eigen/Core>

#include "gendet/errors.hpp"
#include "gendet/scalar.hpp"

namespace gendet {

inline constexpr int kCofactorCap = 7;

namespace detail {

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& a, const char* what) {
    if (a.rows() != a.cols() || a.rows() < 1)
        throw DimensionError(std::string(what) + " requires a non-empty square matrix, got " +
                             std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

template <typename Derived>
void require_finite(const Eigen::MatrixBase<Derived>& a, const char* what) {
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            if (!std::isfinite(a.derived()(i, j)))
                throw NumericError(std::string(what) + ": non-finite entry at (" +
                                   std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
}

} // namespace detail

/// Exact determinant by fraction-free elimination. Pivots on the first
/// nonzero entry of each column; a fully zero column short-circuits to 0.
template <typename Derived>
typename Derived::Scalar det_exact(const Eigen::MatrixBase<Derived>& a) {
    using S = typename Derived::Scalar;
    static_assert(is_exact_v<S>, "det_exact is for exact scalars; use det_float for doubles");
    detail::require_square(a, "det_exact");

    const Index n = a.rows();
    if (n == 1) return a.derived()(0, 0);

    MatrixX<S> w = a.derived();
    S prev_pivot(1);
    int sign = 1;

    for (Index k = 0; k + 1 < n; ++k) {
        Index pivot_row = k;
        while (pivot_row < n && w(pivot_row, k) == S(0)) ++pivot_row;
        if (pivot_row == n) return S(0);
        if (pivot_row != k) {
            w.row(k).swap(w.row(pivot_row));
            sign = -sign;
        }

        const S pivot = w(k, k);
        for (Index i = k + 1; i < n; ++i) {
            for (Index j = k + 1; j < n; ++j)
                w(i, j) = (w(i, j) * pivot - w(i, k) * w(k, j)) / prev_pivot;
            w(i, k) = S(0);
        }
        prev_pivot = pivot;
    }
    // Bareiss leaves det(A) itself in the last diagonal slot.
    return sign > 0 ? w(n - 1, n - 1) : -w(n - 1, n - 1);
}

/// Floating determinant by partially pivoted elimination. Non-finite
/// entries are rejected up front. n <= 3 uses the closed forms.
template <typename Derived>
double det_float(const Eigen::MatrixBase<Derived>& a) {
    static_assert(std::is_same_v<typename Derived::Scalar, double>,
                  "det_float operates on double matrices");
    detail::require_square(a, "det_float");
    detail::require_finite(a, "det_float");

    const Index n = a.rows();
    const auto& m = a.derived();
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    if (n == 3)
        return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
               m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
               m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));

    Eigen::MatrixXd w = m;
    double det = 1.0;
    for (Index k = 0; k < n; ++k) {
        Index pivot_row = k;
        double best = std::abs(w(k, k));
        for (Index i = k + 1; i < n; ++i) {
            const double v = std::abs(w(i, k));
            if (v > best) { // strict: ties keep the lowest row
                best = v;
                pivot_row = i;
            }
        }
        if (best == 0.0) return 0.0;
        if (pivot_row != k) {
            w.row(k).swap(w.row(pivot_row));
            det = -det;
        }
        const double pivot = w(k, k);
        det *= pivot;
        for (Index i = k + 1; i < n; ++i) {
            const double factor = w(i, k) / pivot;
            for (Index j = k + 1; j < n; ++j) w(i, j) -= factor * w(k, j);
        }
    }
    return det;
}

/// Cofactor-expansion oracle along the first column. Capped at 7x7; past
/// that the n! growth adds nothing but wall time.
template <typename Derived>
typename Derived::Scalar det_cofactor(const Eigen::MatrixBase<Derived>& a) {
    using S = typename Derived::Scalar;
    detail::require_square(a, "det_cofactor");
    if (a.rows() > kCofactorCap)
        throw SizeError("det_cofactor capped at " + std::to_string(kCofactorCap) + "x" +
                        std::to_string(kCofactorCap) + ", got " + std::to_string(a.rows()));

    std::vector<int> rows(static_cast<std::size_t>(a.rows()));
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) rows[static_cast<std::size_t>(i)] = i;

    const auto& m = a.derived();
    auto expand = [&m](auto&& self, std::vector<int>& live, int col) -> S {
        if (live.size() == 1) return m(live[0], col);
        S acc(0);
        for (std::size_t i = 0; i < live.size(); ++i) {
            const S lead = m(live[i], col);
            if (lead == S(0)) continue;
            const int removed = live[i];
            live.erase(live.begin() + static_cast<std::ptrdiff_t>(i));
            const S minor = self(self, live, col + 1);
            live.insert(live.begin() + static_cast<std::ptrdiff_t>(i), removed);
            const S term = lead * minor;
            acc += (i % 2 == 0) ? term : -term;
        }
        return acc;
    };
    return expand(expand, rows, 0);
}

/// Domain dispatch: doubles take the pivoted eliminator, exact scalars the
/// fraction-free one.
template <typename Derived>
typename Derived::Scalar det(const Eigen::MatrixBase<Derived>& a) {
    using S = typename Derived::Scalar;
    if constexpr (std::is_floating_point_v<S>) {
        return det_float(a);
    } else {
        const auto& m = a.derived();
        const Index n = a.rows();
        if (n == 2) {
            detail::require_square(a, "det");
            return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
        }
        return det_exact(a);
    }
}

} // namespace gendet
