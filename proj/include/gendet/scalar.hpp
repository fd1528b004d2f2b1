#pragma once

/*
 * Scalar domains.
 *
 * Every algorithm in this library is generic over one of two scalar types:
 *   - Rational: exact arbitrary-precision p/q arithmetic. No rounding, no
 *     overflow; identities can be asserted bit-exactly.
 *   - double: the performance domain; results carry the usual floating
 *     error and are compared against tolerances.
 *
 * Rational wraps boost::multiprecision::cpp_rational behind a deliberately
 * narrow interface. The wrapper keeps Eigen's scalar-promotion SFINAE away
 * from boost's converting constructors (which do not instantiate cleanly
 * against Eigen expression types) and pins down exactly the operations the
 * library relies on. Values are always stored in lowest terms with a
 * positive denominator; the backend maintains that invariant.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

namespace gendet {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    using Rep = boost::multiprecision::cpp_rational;

    Rational() = default;
    Rational(int value) : v_(value) {}
    Rational(long value) : v_(value) {}
    Rational(long long value) : v_(value) {}
    explicit Rational(Rep rep) : v_(std::move(rep)) {}
    explicit Rational(const BigInt& value) : v_(value) {}

    /// p/q with q != 0; normalized by the backend (lowest terms, q > 0).
    Rational(const BigInt& num, const BigInt& den);

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const { return denominator() == 1; }

    /// Nearest double (subject to the usual conversion rounding).
    double to_double() const { return v_.convert_to<double>(); }

    const Rep& rep() const { return v_; }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    Rational operator-() const { return Rational(Rep(-v_)); }
    Rational operator+() const { return *this; }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(Rep(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(Rep(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(Rep(a.v_ * b.v_)); }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = a.v_.compare(b.v_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    Rep v_;
};

Rational abs(const Rational& r);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

/// Parses "p" or "p/q" (optional leading sign). Anything else, including
/// decimal points, is a ParseError; so is a zero denominator.
Rational parse_rational(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Rational& r);

// --- scalar-domain traits -------------------------------------------------

template <typename T>
inline constexpr bool is_exact_v = false;
template <>
inline constexpr bool is_exact_v<Rational> = true;

template <typename T>
concept ExactScalar = is_exact_v<T>;
template <typename T>
concept FloatScalar = std::is_floating_point_v<T>;
template <typename T>
concept Scalar = ExactScalar<T> || FloatScalar<T>;

inline double to_double(double v) { return v; }
inline double to_double(const Rational& v) { return v.to_double(); }

/// Parses a scalar literal from text. The exact domain accepts integers and
/// "p/q"; the float domain additionally accepts decimal and exponent forms.
template <Scalar S>
S parse_scalar(std::string_view text);

template <>
Rational parse_scalar<Rational>(std::string_view text);
template <>
double parse_scalar<double>(std::string_view text);

/// Round-trippable text form ("p/q" exact, shortest-faithful decimal float).
std::string format_scalar(const Rational& v);
std::string format_scalar(double v);

// --- dense types ----------------------------------------------------------

template <Scalar S>
using MatrixX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <Scalar S>
using VectorX = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using MatrixXq = MatrixX<Rational>;
using VectorXq = VectorX<Rational>;

using Index = Eigen::Index;

} // namespace gendet

namespace Eigen {

template <>
struct NumTraits<gendet::Rational> : GenericNumTraits<gendet::Rational> {
    using Real = gendet::Rational;
    using NonInteger = gendet::Rational;
    using Literal = gendet::Rational;
    using Nested = gendet::Rational;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 60,
        MulCost = 60,
    };

    // Exact arithmetic: comparisons carry no slack.
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

} // namespace Eigen
