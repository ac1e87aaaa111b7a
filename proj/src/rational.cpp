#include "c0mono/rational.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace c0mono {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
    if (denominator == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(const mpq_class& value) : value_(value) {
    if (sgn(value_.get_den()) == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_.canonicalize();
}

Rational::Rational(mpq_class&& value) : value_(std::move(value)) {
    if (sgn(value_.get_den()) == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && body.front() == '-') {
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
        throw ParseError("malformed rational '" + std::string(text) + "'");
    }
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (sgn(d) == 0) {
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    if (text.front() == '-') {
        n = -n;
    }
    return Rational(mpq_class(n, d));
}

std::string Rational::str() const {
    // mpq_class::get_str prints "p" when q == 1, otherwise "p/q".
    return value_.get_str(10);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
    if (is_zero()) {
        throw std::domain_error("inverse of zero");
    }
    return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational operator-(const Rational& value) { return Rational(mpq_class(-value.value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

}  // namespace c0mono
