#pragma once

/*
 * Grade-n multivectors over R^m.
 *
 * A grade-n element of the exterior algebra is stored as its C(m,n)
 * coefficients on the basis blades e_{i1} ^ ... ^ e_{in}, indexed by the
 * lexicographic rank of the ascending tuple (i1 < ... < in). The basis
 * blades are orthonormal, so the inner product and squared norm are plain
 * coefficient sums.
 */

#include <cstdint>
#include <string>

#include <Eigen/Core>

#include "gendet/combinatorics.hpp"
#include "gendet/errors.hpp"
#include "gendet/scalar.hpp"
#include "gendet/summation.hpp"

namespace gendet {

template <Scalar S>
class Multivector {
public:
    /// The zero multivector of the given shape.
    Multivector(int ambient, int grade) : ambient_(ambient), grade_(grade) {
        if (grade < 1 || grade > ambient)
            throw DimensionError("multivector requires 1 <= grade <= ambient, got grade " +
                                 std::to_string(grade) + " in dimension " + std::to_string(ambient));
        const std::uint64_t count = binomial(ambient, grade);
        if (count == kBinomialSaturated)
            throw SizeError("multivector coefficient count overflows");
        coefficients_ = VectorX<S>::Constant(static_cast<Index>(count), S(0));
    }

    int ambient() const { return ambient_; }
    int grade() const { return grade_; }
    Index size() const { return coefficients_.size(); }

    const S& operator[](std::uint64_t rank) const {
        check_rank(rank);
        return coefficients_[static_cast<Index>(rank)];
    }
    S& operator[](std::uint64_t rank) {
        check_rank(rank);
        return coefficients_[static_cast<Index>(rank)];
    }

    const S& coefficient(const Combination& blade) const {
        if (blade.ambient() != ambient_ || blade.size() != grade_)
            throw DimensionError("blade does not match multivector shape");
        return coefficients_[static_cast<Index>(tau_rank(blade))];
    }

    const VectorX<S>& coefficients() const { return coefficients_; }

    S squared_norm() const {
        Accumulator<S> acc;
        for (Index i = 0; i < coefficients_.size(); ++i)
            acc.add(coefficients_[i] * coefficients_[i]);
        return acc.value();
    }

    bool is_zero() const {
        for (Index i = 0; i < coefficients_.size(); ++i)
            if (!(coefficients_[i] == S(0))) return false;
        return true;
    }

    friend bool operator==(const Multivector& a, const Multivector& b) {
        if (a.ambient_ != b.ambient_ || a.grade_ != b.grade_) return false;
        for (Index i = 0; i < a.coefficients_.size(); ++i)
            if (!(a.coefficients_[i] == b.coefficients_[i])) return false;
        return true;
    }

private:
    void check_rank(std::uint64_t rank) const {
        if (rank >= static_cast<std::uint64_t>(coefficients_.size()))
            throw SizeError("blade rank " + std::to_string(rank) + " out of range for C(" +
                            std::to_string(ambient_) + "," + std::to_string(grade_) +
                            ") coefficients");
    }

    int ambient_;
    int grade_;
    VectorX<S> coefficients_;
};

/// Euclidean inner product on grade-n multivectors: the coefficient dot
/// product in blade-rank order.
template <Scalar S>
S blade_dot(const Multivector<S>& x, const Multivector<S>& y) {
    if (x.ambient() != y.ambient() || x.grade() != y.grade())
        throw DimensionError("blade_dot requires matching ambient dimension and grade");
    Accumulator<S> acc;
    for (Index i = 0; i < x.size(); ++i)
        acc.add(x[static_cast<std::uint64_t>(i)] * y[static_cast<std::uint64_t>(i)]);
    return acc.value();
}

} // namespace gendet
