#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "qtrin/integer.hpp"

namespace qtrin {

/// Exact rational number in canonical form (reduced, positive denominator).
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t v) : value_(static_cast<long>(v)) {}  // NOLINT(implicit)
    Rational(int v) : value_(v) {}                              // NOLINT(implicit)
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(mpq_class v);
    Rational(const Integer& num, const Integer& den);

    /// Parses "n", "-n" or "n/d".
    static Rational parse(std::string_view text);

    [[nodiscard]] const mpq_class& value() const noexcept { return value_; }
    [[nodiscard]] Integer numerator() const { return Integer(value_.get_num()); }
    [[nodiscard]] Integer denominator() const { return Integer(value_.get_den()); }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }
    /// Smallest integer >= value.
    [[nodiscard]] Integer ceil() const;
    [[nodiscard]] Integer floor() const;
    /// "n" for integers, "n/d" otherwise.
    [[nodiscard]] std::string to_string() const;

    Rational& operator+=(const Rational& o) {
        value_ += o.value_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        value_ -= o.value_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        value_ *= o.value_;
        return *this;
    }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_;
};

/// Exponent of q. Every fractional power in the library is one of these.
using QExponent = Rational;

std::ostream& operator<<(std::ostream& os, const Rational& v);

}  // namespace qtrin
