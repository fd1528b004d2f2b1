#pragma once

/*
 * Areas from the m x 2 g-determinant.
 *
 * For a polygon with vertices A_1..A_m (rows of an m x 2 matrix), the
 * signed area is half the g-determinant of the matrix whose i-th row is
 * A_i + A_{i+1}, cyclically. The classical shoelace formula is kept
 * alongside as the independent oracle; both are signed with the usual
 * counterclockwise-positive convention, and both happily return the
 * winding-weighted area of self-intersecting input.
 *
 * The gdet route enumerates all C(m,2) row pairs, so it is quadratic in
 * the vertex count where the shoelace is linear — the point here is the
 * identity, not speed. The cap is lifted internally (set to the exact
 * pair count) so large discretized curves don't trip the guard meant for
 * runaway n.
 */

#include <cmath>
#include <numbers>

#include <Eigen/Core>

#include "gendet/combinatorics.hpp"
#include "gendet/errors.hpp"
#include "gendet/generalized.hpp"
#include "gendet/scalar.hpp"
#include "gendet/summation.hpp"

namespace gendet {

namespace detail {

template <typename Derived>
void require_polygon(const Eigen::MatrixBase<Derived>& vertices) {
    if (vertices.cols() != 2)
        throw DimensionError("polygon vertices must form an m x 2 matrix, got " +
                             std::to_string(vertices.rows()) + "x" +
                             std::to_string(vertices.cols()));
    if (vertices.rows() < 3)
        throw DimensionError("polygon needs at least 3 vertices, got " +
                             std::to_string(vertices.rows()));
}

} // namespace detail

/// Signed polygon area as half the g-determinant of the cyclic row-sums
/// matrix (row i = vertex i + vertex i+1). Counterclockwise positive.
template <typename Derived>
typename Derived::Scalar polygon_area_gdet(const Eigen::MatrixBase<Derived>& vertices) {
    using S = typename Derived::Scalar;
    detail::require_polygon(vertices);
    const Index m = vertices.rows();
    MatrixX<S> sums(m, 2);
    for (Index i = 0; i < m; ++i) {
        const Index next = (i + 1) % m;
        sums(i, 0) = vertices.derived()(i, 0) + vertices.derived()(next, 0);
        sums(i, 1) = vertices.derived()(i, 1) + vertices.derived()(next, 1);
    }
    const S g = gdet(sums, binomial(static_cast<int>(m), 2));
    return g / S(2);
}

/// Signed polygon area by the shoelace formula — the oracle for the gdet
/// route. Counterclockwise positive.
template <typename Derived>
typename Derived::Scalar polygon_area_shoelace(const Eigen::MatrixBase<Derived>& vertices) {
    using S = typename Derived::Scalar;
    detail::require_polygon(vertices);
    const Index m = vertices.rows();
    Accumulator<S> acc;
    for (Index i = 0; i < m; ++i) {
        const Index next = (i + 1) % m;
        acc.add(vertices.derived()(i, 0) * vertices.derived()(next, 1) -
                vertices.derived()(next, 0) * vertices.derived()(i, 1));
    }
    return acc.value() / S(2);
}

struct CircleAreaSample {
    int vertex_count = 0;
    double area = 0.0;      // gdet area of the inscribed regular polygon
    double abs_error = 0.0; // |area - pi r^2|, expected O(1/m^2)
};

/// Inscribes a regular m-gon in the radius-r circle (vertex k at angle
/// 2 pi k / m) and measures how far its gdet area is from pi r^2.
inline CircleAreaSample circle_area_convergence(int m, double r) {
    if (m < 3) throw DimensionError("circle discretization needs at least 3 vertices");
    if (!(r > 0.0)) throw DimensionError("circle radius must be positive");
    Eigen::MatrixXd vertices(m, 2);
    for (int k = 0; k < m; ++k) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
        vertices(k, 0) = r * std::cos(angle);
        vertices(k, 1) = r * std::sin(angle);
    }
    CircleAreaSample sample;
    sample.vertex_count = m;
    sample.area = polygon_area_gdet(vertices);
    sample.abs_error = std::abs(sample.area - std::numbers::pi * r * r);
    return sample;
}

} // namespace gendet
