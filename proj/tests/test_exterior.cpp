#include <doctest.h>

#include <vector>

#include "gendet/exterior.hpp"
#include "gendet/errors.hpp"
#include "gendet/generalized.hpp"
#include "test_support.hpp"

using namespace gendet;

TEST_SUITE_BEGIN("exterior");

TEST_CASE("wedge of two basis vectors in R^3") {
    MatrixXq a = MatrixXq::Zero(3, 2);
    a(0, 0) = Rational(1);
    a(1, 1) = Rational(1);
    const auto w = wedge_columns(a);
    CHECK(w.ambient() == 3);
    CHECK(w.grade() == 2);
    CHECK(w[0] == Rational(1)); // e1^e2
    CHECK(w[1] == Rational(0)); // e1^e3
    CHECK(w[2] == Rational(0)); // e2^e3
}

TEST_CASE("wedge spec example") {
    MatrixXq a(3, 2);
    a << Rational(1), Rational(0), Rational(0), Rational(1), Rational(1), Rational(1);
    const auto w = wedge_columns(a);
    CHECK(w[0] == Rational(1));
    CHECK(w[1] == Rational(1));
    CHECK(w[2] == Rational(-1));
}

TEST_CASE("wedge with a repeated column vanishes") {
    testing::Rng rng(7001);
    for (int k = 0; k < 25; ++k) {
        MatrixXq a = testing::random_int_matrix(rng, 5, 3);
        a.col(1) = a.col(2);
        CHECK(wedge_columns(a).is_zero());
    }
}

TEST_CASE("wedge agrees with vdet on every shape it accepts") {
    testing::Rng rng(7002);
    for (int m = 1; m <= 7; ++m)
        for (int n = 1; n <= m; ++n)
            for (int k = 0; k < 15; ++k) {
                const MatrixXq a = testing::random_fraction_matrix(rng, m, n);
                CHECK(wedge_columns(a) == vdet(a));
            }
}

TEST_CASE("swapping columns flips the sign of the wedge") {
    testing::Rng rng(7003);
    for (int k = 0; k < 25; ++k) {
        MatrixXq a = testing::random_int_matrix(rng, 6, 3);
        const auto w = wedge_columns(a);
        a.col(0).swap(a.col(2));
        const auto swapped = wedge_columns(a);
        const std::uint64_t size = w.size();
        for (std::uint64_t r = 0; r < size; ++r) CHECK(swapped[r] == -w[r]);
    }
}

TEST_CASE("wedge refuses ambients past the enumeration cap") {
    MatrixXq wide = MatrixXq::Zero(kWedgeAmbientCap + 1, 2);
    wide(0, 0) = Rational(1);
    wide(1, 1) = Rational(1);
    CHECK_THROWS_AS(wedge_columns(wide), SizeError);

    MatrixXq at_cap = MatrixXq::Zero(kWedgeAmbientCap, 2);
    at_cap(0, 0) = Rational(1);
    at_cap(1, 1) = Rational(1);
    CHECK(at_cap.rows() == kWedgeAmbientCap);
    CHECK(wedge_columns(at_cap)[0] == Rational(1));
}

TEST_CASE("blade_dot on unit blades and spec vectors") {
    Multivector<Rational> x(3, 2);
    x[0] = Rational(1);
    x[1] = Rational(1);
    x[2] = Rational(-1);
    CHECK(blade_dot(x, x) == Rational(3));

    Multivector<Rational> e12(3, 2);
    e12[0] = Rational(1);
    Multivector<Rational> e13(3, 2);
    e13[1] = Rational(1);
    CHECK(blade_dot(e12, e13) == Rational(0));
    CHECK(blade_dot(e12, e12) == Rational(1));

    Multivector<Rational> other(4, 2);
    CHECK_THROWS_AS(blade_dot(x, other), DimensionError);
}

TEST_CASE("pairing of vdets computes det(A^T B)") {
    testing::Rng rng(7004);
    for (int k = 0; k < 60; ++k) {
        const MatrixXq a = testing::random_int_matrix(rng, 6, 3);
        const MatrixXq b = testing::random_int_matrix(rng, 6, 3);
        const MatrixXq atb = a.transpose() * b;
        CHECK(blade_dot(vdet(a), vdet(b)) == det_exact(atb));
    }
}

TEST_CASE("directional determinant of a matrix against itself") {
    MatrixXq a(3, 2);
    a << Rational(1), Rational(0), Rational(0), Rational(1), Rational(1), Rational(1);
    const auto proj = directional_det(a, a);
    CHECK(proj.numerator == Rational(3));
    CHECK(proj.direction_squared == Rational(3));
    CHECK(proj.value() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("directional determinant onto an orthogonal span is zero") {
    MatrixXq a = MatrixXq::Zero(4, 2);
    a(0, 0) = Rational(1);
    a(1, 1) = Rational(1);
    MatrixXq b = MatrixXq::Zero(4, 2);
    b(2, 0) = Rational(1);
    b(3, 1) = Rational(1);
    CHECK(directional_det(a, b).numerator == Rational(0));
}

TEST_CASE("directional determinant satisfies Cauchy-Schwarz") {
    testing::Rng rng(7005);
    for (int k = 0; k < 50; ++k) {
        const MatrixXq a = testing::random_int_matrix(rng, 5, 2);
        MatrixXq b = testing::random_int_matrix(rng, 5, 2);
        if (detl_squared(b) == Rational(0)) b(0, 0) += Rational(1, 2);
        if (detl_squared(b) == Rational(0)) continue;
        const auto proj = directional_det(a, b);
        CHECK(proj.numerator * proj.numerator <= detl_squared(a) * proj.direction_squared);
    }
}

TEST_CASE("direction column swap flips the numerator, shear leaves it unchanged") {
    testing::Rng rng(7006);
    for (int k = 0; k < 25; ++k) {
        const MatrixXq a = testing::random_int_matrix(rng, 5, 3);
        MatrixXq b = testing::random_int_matrix(rng, 5, 3);
        if (detl_squared(b) == Rational(0)) continue;
        const auto base = directional_det(a, b);

        MatrixXq swapped = b;
        swapped.col(0).swap(swapped.col(1));
        CHECK(directional_det(a, swapped).numerator == -base.numerator);

        MatrixXq sheared = b;
        sheared.col(2) += Rational(3) * b.col(0);
        const auto after = directional_det(a, sheared);
        CHECK(after.numerator == base.numerator);
        CHECK(after.direction_squared == base.direction_squared);
    }
}

TEST_CASE("degenerate direction is rejected") {
    MatrixXq a(3, 2);
    a << Rational(1), Rational(0), Rational(0), Rational(1), Rational(1), Rational(1);
    MatrixXq b(3, 2);
    b.col(0) << Rational(1), Rational(2), Rational(3);
    b.col(1) = Rational(2) * b.col(0);
    CHECK_THROWS_AS(directional_det(a, b), DegenerateDirectionError);

    MatrixXq mismatched(4, 2);
    mismatched.setConstant(Rational(1));
    CHECK_THROWS_AS(directional_det(a, mismatched), DimensionError);
}

TEST_CASE("multivector shape validation") {
    Multivector<Rational> w(4, 2);
    CHECK(w.size() == 6);
    CHECK(w.is_zero());
    w[5] = Rational(7);
    CHECK(w.coefficient(Combination::from_one_based({3, 4}, 4)) == Rational(7));
    CHECK_THROWS_AS(w.coefficient(Combination::from_one_based({3, 4}, 5)), DimensionError);
    CHECK_THROWS_AS(w.coefficient(Combination::from_one_based({2}, 4)), DimensionError);
    CHECK_THROWS_AS(w[6], SizeError);
}

TEST_SUITE_END();
