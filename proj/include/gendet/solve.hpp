#pragma once

/*
 * Generalized Cramer's rule for overdetermined systems Ax = b, m >= n.
 *
 * The rank-n system is solvable exactly when each replaced-column vector
 * determinant V_j = vdet(A with column j <- b) is proportional to
 * V = vdet(A), and then x_j is the ratio. Proportionality is decided by
 * cross-multiplication against a pivot blade (exact domain) or by the
 * relative residual of the fitted ratio (float domain) — never by
 * blade-wise division, which would blow up on near-zero components.
 *
 * V = 0 means A has rank < n and the rule does not apply (RankDeficient).
 * A failed proportionality check is reported with the column and blade
 * rank where cross-multiplication first breaks, so the verdict can be
 * audited against the raw minors.
 */

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

#include "gendet/combinatorics.hpp"
#include "gendet/errors.hpp"
#include "gendet/generalized.hpp"
#include "gendet/minors.hpp"
#include "gendet/multivector.hpp"
#include "gendet/scalar.hpp"
#include "gendet/summation.hpp"

namespace gendet {

enum class SolveStatus { Solved, Inconsistent, RankDeficient };

template <Scalar S>
struct SolveResult {
    SolveStatus status = SolveStatus::RankDeficient;
    VectorX<S> solution;         // length n when Solved, empty otherwise
    int inconsistent_column = 0; // 1-based column whose replacement broke, 0 if n/a
    std::int64_t inconsistent_blade = -1; // blade rank of the failing cross-product, -1 if n/a

    bool solved() const { return status == SolveStatus::Solved; }
};

namespace detail {

// Exact proportionality: V_j == x_j * V iff V_j[r] * V[pivot] == V_j[pivot] * V[r]
// for all r, with pivot the first nonzero blade of V. Returns the failing
// blade rank, or -1 when proportional (x_j then = V_j[pivot] / V[pivot]).
template <typename S>
std::int64_t cross_check_exact(const Multivector<S>& vj, const Multivector<S>& v, Index pivot) {
    for (Index r = 0; r < v.size(); ++r) {
        if (r == pivot) continue;
        const auto rr = static_cast<std::uint64_t>(r);
        const auto pp = static_cast<std::uint64_t>(pivot);
        if (!(vj[rr] * v[pp] == vj[pp] * v[rr])) return static_cast<std::int64_t>(r);
    }
    return -1;
}

// Float proportionality: fit x_j at V's largest-magnitude blade, then
// require ||V_j - x_j V|| <= tolerance * ||V_j||. Returns the blade of the
// largest violation when the fit fails, -1 otherwise.
inline std::int64_t residual_check_float(const Multivector<double>& vj,
                                         const Multivector<double>& v, Index pivot,
                                         double tolerance, double& fitted) {
    fitted = vj[static_cast<std::uint64_t>(pivot)] / v[static_cast<std::uint64_t>(pivot)];
    NeumaierSum residual2;
    NeumaierSum norm2;
    Index worst = 0;
    double worst_err = -1.0;
    for (Index r = 0; r < v.size(); ++r) {
        const auto rr = static_cast<std::uint64_t>(r);
        const double err = vj[rr] - fitted * v[rr];
        residual2.add(err * err);
        norm2.add(vj[rr] * vj[rr]);
        if (std::abs(err) > worst_err) {
            worst_err = std::abs(err);
            worst = r;
        }
    }
    if (std::sqrt(residual2.value()) <= tolerance * std::sqrt(norm2.value())) return -1;
    return static_cast<std::int64_t>(worst);
}

} // namespace detail

/// Solves the overdetermined system Ax = b by vector-determinant
/// proportionality. `tolerance` applies in the float domain only.
template <typename Derived, typename VecDerived>
SolveResult<typename Derived::Scalar>
solve_overdetermined(const Eigen::MatrixBase<Derived>& a, const Eigen::MatrixBase<VecDerived>& b,
                     std::uint64_t max_minors = kDefaultMinorCap, double tolerance = 1e-9) {
    using S = typename Derived::Scalar;
    static_assert(std::is_same_v<S, typename VecDerived::Scalar>,
                  "system matrix and right-hand side must share a scalar domain");
    detail::require_tall(a, "solve_overdetermined");
    if (b.rows() != a.rows() || b.cols() != 1)
        throw DimensionError("right-hand side must be a length-" + std::to_string(a.rows()) +
                             " column, got " + std::to_string(b.rows()) + "x" +
                             std::to_string(b.cols()));

    const Index n = a.cols();
    const Multivector<S> v = vdet(a, max_minors);

    SolveResult<S> result;
    if (v.is_zero()) {
        result.status = SolveStatus::RankDeficient;
        return result;
    }

    // Pivot blade: first nonzero exactly; largest magnitude in float.
    Index pivot = 0;
    if constexpr (is_exact_v<S>) {
        while (v[static_cast<std::uint64_t>(pivot)] == S(0)) ++pivot;
    } else {
        double best = -1.0;
        for (Index r = 0; r < v.size(); ++r) {
            const double mag = std::abs(v[static_cast<std::uint64_t>(r)]);
            if (mag > best) {
                best = mag;
                pivot = r;
            }
        }
    }

    MatrixX<S> replaced = a.derived();
    VectorX<S> x(n);
    for (Index j = 0; j < n; ++j) {
        replaced.col(j) = b.derived();
        const Multivector<S> vj = vdet(replaced, max_minors);
        replaced.col(j) = a.derived().col(j);

        std::int64_t failing;
        if constexpr (is_exact_v<S>) {
            failing = detail::cross_check_exact(vj, v, pivot);
            if (failing < 0) x[j] = vj[static_cast<std::uint64_t>(pivot)] / v[static_cast<std::uint64_t>(pivot)];
        } else {
            double fitted = 0.0;
            failing = detail::residual_check_float(vj, v, pivot, tolerance, fitted);
            if (failing < 0) x[j] = fitted;
        }
        if (failing >= 0) {
            result.status = SolveStatus::Inconsistent;
            result.inconsistent_column = static_cast<int>(j) + 1;
            result.inconsistent_blade = failing;
            return result;
        }
    }

    // Substitution check. Exact proportionality across every column already
    // implies Ax = b, so an exact-domain failure here is a library bug.
    if constexpr (is_exact_v<S>) {
        const VectorX<S> ax = a.derived() * x;
        for (Index i = 0; i < a.rows(); ++i)
            if (!(ax[i] == b.derived()(i, 0)))
                throw std::logic_error("solve_overdetermined: proportional minors but Ax != b");
    } else {
        const Eigen::VectorXd ax = a.derived() * x;
        double scale = 0.0;
        for (Index i = 0; i < b.rows(); ++i) scale = std::max(scale, std::abs(b.derived()(i, 0)));
        for (Index i = 0; i < a.rows(); ++i)
            for (Index j = 0; j < n; ++j)
                scale = std::max(scale, std::abs(a.derived()(i, j) * x[j]));
        const double residual = (ax - b.derived()).template lpNorm<Eigen::Infinity>();
        if (residual > tolerance * std::max(scale, 1e-300) * static_cast<double>(n)) {
            // Proportionality passed within tolerance but substitution did
            // not: report inconsistency without a single-blade witness.
            result.status = SolveStatus::Inconsistent;
            result.inconsistent_column = 0;
            result.inconsistent_blade = -1;
            return result;
        }
    }

    result.status = SolveStatus::Solved;
    result.solution = std::move(x);
    return result;
}

/// The |x_j| magnitudes of Eq.-style Cramer ratios: detl(column-j-replaced
/// A) / detl(A). Requires a solvable system; the exact domain verifies
/// detl^2(replaced) = x_j^2 * detl^2(A) identically and returns |x_j|, the
/// float domain returns the detl ratio directly.
template <typename Derived, typename VecDerived>
VectorX<typename Derived::Scalar>
cramer_magnitudes(const Eigen::MatrixBase<Derived>& a, const Eigen::MatrixBase<VecDerived>& b,
                  std::uint64_t max_minors = kDefaultMinorCap, double tolerance = 1e-9) {
    using S = typename Derived::Scalar;
    const SolveResult<S> outcome = solve_overdetermined(a, b, max_minors, tolerance);
    if (outcome.status == SolveStatus::RankDeficient)
        throw ConsistencyError("cramer_magnitudes: system is rank-deficient");
    if (outcome.status == SolveStatus::Inconsistent)
        throw ConsistencyError("cramer_magnitudes: system is inconsistent (column " +
                               std::to_string(outcome.inconsistent_column) + ", blade rank " +
                               std::to_string(outcome.inconsistent_blade) + ")");

    const Index n = a.cols();
    VectorX<S> out(n);
    if constexpr (is_exact_v<S>) {
        const S d2 = detl_squared(a, max_minors);
        MatrixX<S> replaced = a.derived();
        for (Index j = 0; j < n; ++j) {
            replaced.col(j) = b.derived();
            const S r2 = detl_squared(replaced, max_minors);
            replaced.col(j) = a.derived().col(j);
            const S xj = outcome.solution[j];
            if (!(r2 == xj * xj * d2))
                throw std::logic_error("cramer_magnitudes: detl^2 ratio disagrees with solution");
            out[j] = abs(xj);
        }
    } else {
        const double d = detl(a, max_minors);
        MatrixX<S> replaced = a.derived();
        for (Index j = 0; j < n; ++j) {
            replaced.col(j) = b.derived();
            out[j] = detl(replaced, max_minors) / d;
            replaced.col(j) = a.derived().col(j);
        }
    }
    return out;
}

} // namespace gendet
