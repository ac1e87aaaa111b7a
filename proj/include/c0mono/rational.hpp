#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace c0mono {

/// Raised when a rational literal cannot be parsed.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exact arbitrary-precision rational number.
///
/// Always held in lowest terms with a positive denominator, so equality is
/// structural. Backed by GMP's mpq_class.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long numerator, long denominator);
    explicit Rational(const mpq_class& value);
    explicit Rational(mpq_class&& value);

    /// Parses "p", "-p" or "p/q". The result is reduced; q must be nonzero.
    static Rational parse(std::string_view text);

    /// "p/q" in lowest terms, or "p" when the denominator is 1.
    [[nodiscard]] std::string str() const;

    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return value_; }

    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] Rational abs() const;
    [[nodiscard]] Rational inverse() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& value);

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return cmp(lhs.value_, rhs.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& value);

private:
    mpq_class value_;
};

}  // namespace c0mono
