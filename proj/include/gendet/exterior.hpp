#pragma once

/*
 * Exterior-algebra brute force.
 *
 * wedge_columns expands a1 ^ a2 ^ ... ^ an literally: distribute each
 * column over the basis vectors e_1..e_m, drop terms with a repeated
 * index, sort each surviving index word into ascending order while
 * tracking the permutation sign, and accumulate onto the blade
 * coefficients. This touches up to m!/(m-n)! terms and never looks at a
 * determinant, which is exactly why it works as an independent oracle for
 * vdet: the two agree only if the minor machinery and the sign/ranking
 * conventions are all right.
 *
 * directional_det is the inner-product form built on top: the component
 * of wedge(A) along the unit blade of wedge(B), i.e.
 * <vdet A, vdet B> / detl(B). Its square is rational when the inputs are,
 * so the value is carried as the pair (numerator, detl^2 of B).
 */

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "gendet/combinatorics.hpp"
#include "gendet/errors.hpp"
#include "gendet/generalized.hpp"
#include "gendet/minors.hpp"
#include "gendet/multivector.hpp"
#include "gendet/scalar.hpp"

namespace gendet {

/// Ambient-dimension cap for the wedge expansion; the term count grows as
/// m!/(m-n)! and past this the oracle stops being a quick cross-check.
inline constexpr int kWedgeAmbientCap = 10;

namespace detail {

// Distributes column `col` over the basis, carrying the indices chosen so
// far (ascending flag not required), a bitmask of used indices, the
// running product of entries, and the sign accumulated from sorting.
template <typename Mat, typename S>
void wedge_distribute(const Mat& m, int col, int n, std::vector<int>& word,
                      std::uint32_t used, const S& product, int sign,
                      Multivector<S>& out) {
    if (col == n) {
        out[tau_rank(std::span<const int>(word), static_cast<int>(m.rows()))] +=
            sign > 0 ? product : -product;
        return;
    }
    for (int i = 0; i < static_cast<int>(m.rows()); ++i) {
        if (used & (1u << i)) continue; // e_i ^ e_i = 0
        const S entry = m(i, col);
        if (entry == S(0)) continue;
        // Insert i into the ascending word; each transposition flips sign.
        int pos = static_cast<int>(word.size());
        while (pos > 0 && word[static_cast<std::size_t>(pos - 1)] > i) --pos;
        const int flips = static_cast<int>(word.size()) - pos;
        word.insert(word.begin() + pos, i);
        wedge_distribute(m, col + 1, n, word, used | (1u << i), S(product * entry),
                         (flips % 2 == 0) ? sign : -sign, out);
        word.erase(word.begin() + pos);
    }
}

} // namespace detail

/// The wedge product of the columns of a tall matrix, expanded by direct
/// distribution over basis vectors. Capped at ambient dimension 10.
template <typename Derived>
Multivector<typename Derived::Scalar> wedge_columns(const Eigen::MatrixBase<Derived>& a) {
    using S = typename Derived::Scalar;
    detail::require_tall(a, "wedge_columns");
    const int m = static_cast<int>(a.rows());
    const int n = static_cast<int>(a.cols());
    if (m > kWedgeAmbientCap)
        throw SizeError("wedge_columns capped at ambient dimension " +
                        std::to_string(kWedgeAmbientCap) + ", got " + std::to_string(m));

    Multivector<S> out(m, n);
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(n));
    detail::wedge_distribute(a.derived(), 0, n, word, 0u, S(1), 1, out);
    return out;
}

/// The directional determinant <vdet A, vdet B> / detl(B), carried as the
/// exact pair (numerator, detl^2 of the direction) so no root is taken in
/// the exact domain.
template <Scalar S>
struct DirectionalProjection {
    S numerator{0};          // <vdet A, vdet B>
    S direction_squared{0};  // detl^2(B) > 0

    double value() const {
        return to_double(numerator) / std::sqrt(to_double(direction_squared));
    }
};

/// Projects the wedge of A's columns onto the direction spanned by the
/// wedge of B's columns. A and B must share shape; B must have
/// independent columns (detl^2(B) > 0).
template <typename DerivedA, typename DerivedB>
DirectionalProjection<typename DerivedA::Scalar>
directional_det(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b,
                std::uint64_t max_minors = kDefaultMinorCap) {
    using S = typename DerivedA::Scalar;
    static_assert(std::is_same_v<S, typename DerivedB::Scalar>,
                  "directional_det requires one scalar domain");
    detail::require_tall(a, "directional_det");
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("directional_det requires matching shapes, got " +
                             std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                             std::to_string(b.rows()) + "x" + std::to_string(b.cols()));

    const Multivector<S> va = vdet(a, max_minors);
    const Multivector<S> vb = vdet(b, max_minors);
    DirectionalProjection<S> out;
    out.numerator = blade_dot(va, vb);
    out.direction_squared = vb.squared_norm();
    if (out.direction_squared == S(0))
        throw DegenerateDirectionError(
            "directional_det: direction matrix has dependent columns (detl = 0)");
    return out;
}

} // namespace gendet
