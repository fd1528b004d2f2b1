#include <doctest.h>

#include <cmath>
#include <vector>

#include "gendet/generalized.hpp"
#include "gendet/errors.hpp"
#include "gendet/minors.hpp"
#include "test_support.hpp"

using namespace gendet;

namespace {

MatrixXq spec_matrix() {
    MatrixXq a(3, 2);
    a << Rational(1), Rational(0), Rational(0), Rational(1), Rational(1), Rational(1);
    return a;
}

} // namespace

TEST_SUITE_BEGIN("generalized");

TEST_CASE("minor_table lists lex-ordered minors") {
    const MinorTable<Rational> table = minor_table(spec_matrix());
    REQUIRE(table.entries.size() == 3);
    CHECK(table.entries[0].first.one_based() == std::vector<int>{1, 2});
    CHECK(table.entries[0].second == Rational(1));
    CHECK(table.entries[1].first.one_based() == std::vector<int>{1, 3});
    CHECK(table.entries[1].second == Rational(1));
    CHECK(table.entries[2].first.one_based() == std::vector<int>{2, 3});
    CHECK(table.entries[2].second == Rational(-1));
}

TEST_CASE("minor_table degenerate shapes") {
    testing::Rng rng(6001);
    const MatrixXq sq = testing::random_int_matrix(rng, 4, 4);
    const auto table = minor_table(sq);
    REQUIRE(table.entries.size() == 1);
    CHECK(table.entries[0].second == det_exact(sq));

    MatrixXq col(4, 1);
    col << Rational(3), Rational(-1), Rational(0), Rational(7);
    const auto singles = minor_table(col);
    REQUIRE(singles.entries.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(singles.entries[static_cast<std::size_t>(i)].second == col(i, 0));
}

TEST_CASE("detl spec values") {
    MatrixXq pyth(2, 1);
    pyth << Rational(3), Rational(4);
    CHECK(detl_squared(pyth) == Rational(25));
    CHECK(detl(pyth) == 5.0);

    CHECK(detl_squared(spec_matrix()) == Rational(3));

    MatrixXq wide(2, 3);
    wide.setConstant(Rational(2));
    CHECK(detl_squared(wide) == Rational(0)); // wide convention, not an error

    testing::Rng rng(6002);
    const MatrixXq sq = testing::random_int_matrix(rng, 3, 3);
    CHECK(detl_squared(sq) == det_exact(sq) * det_exact(sq));

    CHECK_THROWS_AS(detl_squared(MatrixXq()), DimensionError);
}

TEST_CASE("detl_squared equals the Gram determinant") {
    testing::Rng rng(6003);
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= m; ++n)
            for (int k = 0; k < 20; ++k) {
                const MatrixXq a = testing::random_int_matrix(rng, m, n);
                const MatrixXq gram = a.transpose() * a;
                CHECK(detl_squared(a) == det_exact(gram));
            }
}

TEST_CASE("detl_gram spec values") {
    Eigen::MatrixXd a(3, 2);
    a << 1, 0, 0, 1, 1, 1;
    CHECK(detl_gram(a) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));

    Eigen::MatrixXd ortho = Eigen::MatrixXd::Zero(5, 2);
    ortho(0, 0) = 1;
    ortho(1, 1) = 1;
    CHECK(detl_gram(ortho) == 1.0);

    Eigen::MatrixXd dup(4, 2);
    dup.col(0).setLinSpaced(4, 1.0, 4.0);
    dup.col(1) = dup.col(0);
    CHECK(detl_gram(dup) == 0.0); // singular Gram matrix clamps to zero

    CHECK_THROWS_AS(detl_gram(Eigen::MatrixXd::Zero(2, 3)), DimensionError);
}

TEST_CASE("detl_adaptive switches to the Gram path above the cap") {
    testing::Rng rng(6004);
    const Eigen::MatrixXd a = testing::random_double_matrix(rng, 9, 3);

    const DetlOutcome direct = detl_adaptive(a);
    CHECK(direct.path == DetlPath::Minors);

    const DetlOutcome fallback = detl_adaptive(a, /*max_minors=*/5);
    CHECK(fallback.path == DetlPath::Gram);
    CHECK(fallback.value == doctest::Approx(direct.value).epsilon(1e-9));

    // the strict minor path refuses instead of falling back
    CHECK_THROWS_AS(detl_squared(a, 5), MinorCapError);
}

TEST_CASE("minor cap error carries the counts") {
    testing::Rng rng(6005);
    const MatrixXq a = testing::random_int_matrix(rng, 10, 4);
    try {
        vdet(a, 10);
        FAIL("expected MinorCapError");
    } catch (const MinorCapError& e) {
        CHECK(e.required() == 210);
        CHECK(e.cap() == 10);
    }
}

TEST_CASE("vdet spec values") {
    testing::Rng rng(6006);
    MatrixXq sq(2, 2);
    sq << Rational(2), Rational(3), Rational(5), Rational(7);
    const auto vsq = vdet(sq);
    REQUIRE(vsq.size() == 1);
    CHECK(vsq[0] == Rational(-1)); // ad - bc

    MatrixXq basis(3, 2);
    basis << Rational(1), Rational(0), Rational(0), Rational(1), Rational(0), Rational(0);
    const auto vb = vdet(basis);
    CHECK(vb[0] == Rational(1));
    CHECK(vb[1] == Rational(0));
    CHECK(vb[2] == Rational(0));

    const auto v = vdet(spec_matrix());
    CHECK(v[0] == Rational(1));
    CHECK(v[1] == Rational(1));
    CHECK(v[2] == Rational(-1));
    CHECK(v.coefficient(Combination::from_one_based({2, 3}, 3)) == Rational(-1));

    CHECK_THROWS_AS(vdet(testing::random_int_matrix(rng, 2, 3)), DimensionError);
}

TEST_CASE("vdet squared norm is detl squared") {
    testing::Rng rng(6007);
    for (int k = 0; k < 50; ++k) {
        const MatrixXq a = testing::random_int_matrix(rng, 6, 3);
        CHECK(vdet(a).squared_norm() == detl_squared(a));
    }
}

TEST_CASE("gdet spec values and recursion equivalence") {
    MatrixXq col(3, 1);
    col << Rational(1), Rational(2), Rational(3);
    CHECK(gdet(col) == Rational(2)); // 1 - 2 + 3
    CHECK(gdet_recursive(col) == Rational(2));

    MatrixXq sq(2, 2);
    sq << Rational(1), Rational(2), Rational(3), Rational(4);
    CHECK(gdet(sq) == Rational(-2)); // single combination, sign +1

    CHECK(gdet(spec_matrix()) == Rational(-1));
    CHECK(gdet_recursive(spec_matrix()) == Rational(-1));

    testing::Rng rng(6008);
    for (int k = 0; k < 100; ++k) {
        const MatrixXq a = testing::random_int_matrix(rng, 4, 2);
        CHECK(gdet(a) == gdet_recursive(a));
    }
}

TEST_CASE("gdet_recursive base case is the alternating sum") {
    testing::Rng rng(6009);
    for (int m = 1; m <= 9; ++m) {
        const MatrixXq col = testing::random_int_matrix(rng, m, 1);
        Rational expected(0);
        for (int i = 0; i < m; ++i)
            expected += (i % 2 == 0) ? col(i, 0) : -col(i, 0);
        CHECK(gdet_recursive(col) == expected);
    }
}

TEST_CASE("tdet spec values") {
    testing::Rng rng(6010);
    const MatrixXq sq = testing::random_int_matrix(rng, 4, 4);
    CHECK(tdet(sq) == det_exact(sq));

    CHECK(tdet(spec_matrix()) == Rational(1)); // 1 + 1 - 1

    MatrixXq basis(3, 2);
    basis << Rational(1), Rational(0), Rational(0), Rational(1), Rational(0), Rational(0);
    CHECK(tdet(basis) == Rational(1)); // minors 1, 0, 0
}

TEST_CASE("column scaling, shear, and permutation invariances (spot checks)") {
    testing::Rng rng(6011);
    for (int k = 0; k < 50; ++k) {
        const MatrixXq a = testing::random_int_matrix(rng, 5, 3);
        const Rational d2 = detl_squared(a);

        const Rational s = testing::random_nonzero_rational(rng);
        MatrixXq scaled = a;
        scaled.col(1) *= s;
        CHECK(detl_squared(scaled) == s * s * d2);

        MatrixXq sheared = a;
        sheared.col(0) += s * a.col(2);
        CHECK(detl_squared(sheared) == d2);

        MatrixXq permuted = a;
        permuted.row(0).swap(permuted.row(4));
        permuted.col(0).swap(permuted.col(2));
        CHECK(detl_squared(permuted) == d2);
    }
}

TEST_CASE("vdet vanishes when two columns are equal") {
    testing::Rng rng(6012);
    for (int k = 0; k < 50; ++k) {
        MatrixXq a = testing::random_int_matrix(rng, 5, 3);
        a.col(2) = a.col(0);
        CHECK(vdet(a).is_zero());
    }
}

TEST_CASE("frozen non-multiplicativity witness") {
    MatrixXq b(2, 1);
    b << Rational(1), Rational(0);
    const MatrixXq ab = spec_matrix() * b;
    CHECK(detl_squared(ab) == Rational(2));
    CHECK(detl_squared(spec_matrix()) * detl_squared(b) == Rational(3));
}

TEST_SUITE_END();
