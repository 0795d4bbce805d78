#include "dictlp/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace dictlp {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

}  // namespace

Rational Rational::fraction(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::fraction(long num, long den) {
    return fraction(mpz_class(num), mpz_class(den));
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    std::string_view num_part = body;
    std::string_view den_part;
    bool has_den = false;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num_part = body.substr(0, slash);
        den_part = body.substr(slash + 1);
        has_den = true;
    }
    if (!all_digits(num_part) || (has_den && !all_digits(den_part)))
        throw std::invalid_argument("rational: malformed literal '" + std::string(text) + "'");

    mpz_class num(std::string(num_part), 10);
    if (negative) num = -num;
    mpz_class den(1);
    if (has_den) den = mpz_class(std::string(den_part), 10);
    return fraction(num, den);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

std::string Rational::to_string() const { return value_.get_str(10); }

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

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
    if (rhs.is_zero()) throw std::domain_error("rational: division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational rat_canonicalize(const mpz_class& num, const mpz_class& den) {
    return Rational::fraction(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace dictlp
