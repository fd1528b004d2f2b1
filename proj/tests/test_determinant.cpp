#include <doctest.h>

#include <cmath>
#include <limits>

#include "gendet/determinant.hpp"
#include "gendet/errors.hpp"
#include "test_support.hpp"

using namespace gendet;

TEST_SUITE_BEGIN("determinant");

TEST_CASE("det_exact basics") {
    MatrixXq id(2, 2);
    id << Rational(1), Rational(0), Rational(0), Rational(1);
    CHECK(det_exact(id) == Rational(1));

    MatrixXq a(2, 2);
    a << Rational(1), Rational(2), Rational(3), Rational(4);
    CHECK(det_exact(a) == Rational(-2));
    CHECK(det(a) == Rational(-2)); // dispatch

    MatrixXq wide(2, 3);
    wide.setConstant(Rational(1));
    CHECK_THROWS_AS(det_exact(wide), DimensionError);
}

TEST_CASE("det_exact equals the cofactor oracle up to 7x7") {
    testing::Rng rng(5201);
    for (int n = 1; n <= 7; ++n)
        for (int k = 0; k < 150; ++k) {
            const MatrixXq a = testing::random_int_matrix(rng, n, n);
            CHECK(det_exact(a) == det_cofactor(a));
        }
}

TEST_CASE("det_exact on fractional entries stays in the field") {
    testing::Rng rng(5202);
    for (int k = 0; k < 100; ++k) {
        const MatrixXq a = testing::random_fraction_matrix(rng, 4, 4);
        CHECK(det_exact(a) == det_cofactor(a));
    }
}

TEST_CASE("transpose invariance and row-swap antisymmetry") {
    testing::Rng rng(5203);
    for (int k = 0; k < 100; ++k) {
        const MatrixXq a = testing::random_int_matrix(rng, 5, 5);
        CHECK(det_exact(a.transpose()) == det_exact(a));

        MatrixXq swapped = a;
        swapped.row(1).swap(swapped.row(3));
        CHECK(det_exact(swapped) == -det_exact(a));
    }
}

TEST_CASE("det_exact is multilinear in a column") {
    testing::Rng rng(5204);
    for (int k = 0; k < 100; ++k) {
        MatrixXq a = testing::random_int_matrix(rng, 4, 4);
        const VectorXq u = testing::random_int_matrix(rng, 4, 1).col(0);
        const VectorXq v = testing::random_int_matrix(rng, 4, 1).col(0);
        const Rational alpha = testing::random_nonzero_rational(rng);
        const Rational beta = testing::random_nonzero_rational(rng);

        MatrixXq au = a;
        au.col(2) = u;
        MatrixXq av = a;
        av.col(2) = v;
        a.col(2) = alpha * u + beta * v;
        CHECK(det_exact(a) == alpha * det_exact(au) + beta * det_exact(av));
    }
}

TEST_CASE("det_float basics") {
    Eigen::MatrixXd diag(2, 2);
    diag << 2, 0, 0, 3;
    CHECK(det_float(diag) == 6.0);

    Eigen::MatrixXd perm = Eigen::MatrixXd::Identity(4, 4);
    perm.row(0).swap(perm.row(2)); // one transposition
    CHECK(det_float(perm) == -1.0);

    Eigen::MatrixXd cyc(3, 3);
    cyc << 0, 1, 0, 0, 0, 1, 1, 0, 0;
    CHECK(det_float(cyc) == 1.0); // even permutation, closed-form path
}

TEST_CASE("det_float matches the exact path on well-conditioned dyadic inputs") {
    testing::Rng rng(5205);
    int accepted = 0;
    while (accepted < 100) {
        const Eigen::MatrixXd a = testing::random_dyadic_matrix(rng, 6, 6);
        const double exact = to_double(det_exact(testing::rationalize(a)));
        // elimination's backward error scales with the matrix, so the
        // determinant-relative error grows as |det| shrinks against the
        // Hadamard bound; keep only well-conditioned draws
        double hadamard = 1.0;
        for (int i = 0; i < 6; ++i) hadamard *= a.row(i).norm();
        if (std::abs(exact) < 1e-3 * hadamard) continue;
        ++accepted;
        const double approx = det_float(a);
        CHECK(std::abs(approx - exact) / std::abs(exact) <= 1e-12);
    }
}

TEST_CASE("det_float rejects non-finite entries and bad shapes") {
    Eigen::MatrixXd bad(2, 2);
    bad << 1, 2, 3, std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(det_float(bad), NumericError);
    bad(1, 1) = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(det_float(bad), NumericError);

    CHECK_THROWS_AS(det_float(Eigen::MatrixXd::Zero(2, 3)), DimensionError);
    CHECK_THROWS_AS(det_float(Eigen::MatrixXd()), DimensionError);
}

TEST_CASE("det_float singular input returns exactly zero") {
    Eigen::MatrixXd a(4, 4);
    a.setRandom();
    a.col(3) = a.col(0); // duplicate column
    CHECK(det_float(a) == 0.0);
}

TEST_CASE("det_cofactor cap and base cases") {
    MatrixXq one(1, 1);
    one(0, 0) = Rational(BigInt(5), BigInt(3));
    CHECK(det_cofactor(one) == Rational(BigInt(5), BigInt(3)));

    MatrixXq a(2, 2);
    a << Rational(1), Rational(2), Rational(3), Rational(4);
    CHECK(det_cofactor(a) == Rational(-2));

    testing::Rng rng(5206);
    const MatrixXq big = testing::random_int_matrix(rng, 8, 8);
    CHECK_THROWS_AS(det_cofactor(big), SizeError);
}

TEST_CASE("float dispatch closed forms agree with elimination") {
    testing::Rng rng(5207);
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k < 50; ++k) {
            const Eigen::MatrixXd a = testing::random_dyadic_matrix(rng, n, n);
            const double closed = det(a); // n <= 3 short-circuit
            const double exact = to_double(det_exact(testing::rationalize(a)));
            CHECK(std::abs(closed - exact) <= 1e-12 * std::max(1.0, std::abs(exact)));
        }
}

TEST_SUITE_END();
