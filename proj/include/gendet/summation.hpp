#pragma once

/*
 * Deterministic accumulation over minor sums.
 *
 * Floating sums over C(m,n) terms use Neumaier's compensated scheme in the
 * fixed lexicographic term order, so results are bit-identical run to run
 * and the compensation keeps long sums (the 10^7-minor regime) faithful.
 * Exact scalars accumulate plainly; they have nothing to compensate.
 */

#include <cmath>

#include "gendet/scalar.hpp"

namespace gendet {

class NeumaierSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            compensation_ += (sum_ - t) + x;
        else
            compensation_ += (x - t) + sum_;
        sum_ = t;
    }

    double value() const { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

template <Scalar S>
class Accumulator {
public:
    void add(const S& x) { sum_ += x; }
    S value() const { return sum_; }

private:
    S sum_{0};
};

template <>
class Accumulator<double> {
public:
    void add(double x) { sum_.add(x); }
    double value() const { return sum_.value(); }

private:
    NeumaierSum sum_;
};

} // namespace gendet
