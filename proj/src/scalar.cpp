#include "gendet/scalar.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <ostream>

#include "gendet/errors.hpp"

namespace gendet {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

BigInt parse_big_int(std::string_view s) {
    if (!is_integer_literal(s))
        throw ParseError("malformed integer literal '" + std::string(s) + "'");
    if (s.front() == '+') s.remove_prefix(1);
    return BigInt(std::string(s));
}

} // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw ParseError("rational with zero denominator");
    // the backend reduces to lowest terms but wants the sign on the
    // numerator, so 4/-6 must arrive as -4/6
    if (den < 0)
        v_ = Rep(-num, -den);
    else
        v_ = Rep(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw NumericError("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rational abs(const Rational& r) {
    return r < Rational(0) ? -r : r;
}

std::string to_string(const Rational& r) {
    std::string s = r.numerator().str();
    if (!r.is_integer()) {
        s += '/';
        s += r.denominator().str();
    }
    return s;
}

Rational parse_rational(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) throw ParseError("empty rational literal");
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_big_int(s));
    const BigInt num = parse_big_int(s.substr(0, slash));
    const BigInt den = parse_big_int(s.substr(slash + 1));
    if (den.is_zero())
        throw ParseError("zero denominator in '" + std::string(s) + "'");
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << to_string(r);
}

template <>
Rational parse_scalar<Rational>(std::string_view text) {
    return parse_rational(text);
}

template <>
double parse_scalar<double>(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) throw ParseError("empty numeric literal");
    if (s.find('/') != std::string_view::npos)
        return parse_rational(s).to_double();
    double value = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (!s.empty() && s.front() == '+') ++first; // from_chars rejects leading '+'
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError("malformed numeric literal '" + std::string(s) + "'");
    return value;
}

std::string format_scalar(const Rational& v) {
    return to_string(v);
}

std::string format_scalar(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace gendet
