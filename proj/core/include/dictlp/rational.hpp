#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dictlp {

/**
 * Exact rational number backed by a GMP fraction.
 *
 * Every value is kept in canonical form: positive denominator, numerator and
 * denominator coprime, zero stored as 0/1. Equality is therefore structural.
 *
 * Text syntax is an optional leading '-', a decimal integer, and optionally
 * '/' followed by a positive decimal integer (`-11/2`, `3`, `0`).
 */
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)

    /// Canonical form of num/den. Throws std::domain_error when den is zero.
    static Rational fraction(const mpz_class& num, const mpz_class& den);
    static Rational fraction(long num, long den);

    /// Parses the canonical text syntax; accepts non-reduced input such as
    /// `2/4`. Throws std::invalid_argument on malformed text and
    /// std::domain_error on a zero denominator.
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_positive() const { return sign() > 0; }
    bool is_negative() const { return sign() < 0; }

    Rational abs() const;
    std::string to_string() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return cmp(lhs.value_, rhs.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        return cmp(lhs.value_, rhs.value_) <=> 0;
    }

    const mpq_class& gmp() const { return value_; }

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_{0};
};

/// Equivalent to Rational::fraction; the canonicalizing constructor.
Rational rat_canonicalize(const mpz_class& num, const mpz_class& den);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace dictlp
