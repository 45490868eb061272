#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qtrin/errors.hpp"
#include "qtrin/integer.hpp"
#include "qtrin/rational.hpp"

namespace qtrin {

/// Sparse Laurent polynomial in q with rational exponents and
/// arbitrary-precision integer coefficients.
///
/// Terms are kept sorted by exponent with no zero coefficients, so two
/// polynomials are equal iff their term lists are equal. Internally all
/// exponents are int64 numerators over one shared denominator, reduced to
/// the smallest such denominator after every operation; arithmetic that
/// would overflow the grid throws std::overflow_error.
class QPoly {
public:
    struct Term {
        QExponent exponent;
        Integer coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    QPoly() = default;

    static QPoly constant(const Integer& c);
    static QPoly monomial(const QExponent& e, const Integer& c = Integer(1));
    /// Sums duplicate exponents and drops zeros.
    static QPoly from_terms(std::span<const std::pair<QExponent, Integer>> terms);
    /// coeffs[i] is the coefficient of q^(offset + i).
    static QPoly from_dense(std::int64_t offset, std::span<const Integer> coeffs);
    /// Exponents are exps[i] / den. exps must be strictly increasing.
    static QPoly from_grid(std::int64_t den, std::vector<std::int64_t> exps,
                           std::vector<Integer> coeffs);

    [[nodiscard]] bool is_zero() const noexcept { return exps_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return exps_.size(); }
    [[nodiscard]] std::vector<Term> terms() const;
    [[nodiscard]] Integer coefficient(const QExponent& e) const;
    [[nodiscard]] QExponent min_exponent() const;
    [[nodiscard]] QExponent max_exponent() const;
    [[nodiscard]] bool all_coefficients_nonnegative() const;

    [[nodiscard]] std::int64_t grid_denominator() const noexcept { return den_; }
    [[nodiscard]] std::span<const std::int64_t> grid_exponents() const noexcept { return exps_; }
    [[nodiscard]] std::span<const Integer> coefficients() const noexcept { return coeffs_; }

    QPoly& operator+=(const QPoly& rhs);
    QPoly& operator-=(const QPoly& rhs);
    QPoly& operator*=(const QPoly& rhs);
    /// this += c * q^e * rhs
    void add_scaled(const QPoly& rhs, const QExponent& e, const Integer& c = Integer(1));

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator-(QPoly a);
    friend bool operator==(const QPoly& a, const QPoly& b) = default;

    [[nodiscard]] QPoly shifted(const QExponent& r) const;
    [[nodiscard]] QPoly substituted_qinv() const;
    /// Drops every term with exponent >= order.
    [[nodiscard]] QPoly truncated(const QExponent& order) const;
    [[nodiscard]] Integer eval_at_one() const;

    /// Canonical text form, e.g. "1 + q + 2*q^2 - q^(5/2)".
    [[nodiscard]] std::string to_string() const;

    /// Product keeping only exponents < *order (all of them when order is null).
    friend QPoly multiply_truncated(const QPoly& a, const QPoly& b, const QExponent* order);

private:
    void normalize();
    void rescale(std::int64_t new_den);

    std::int64_t den_ = 1;
    std::vector<std::int64_t> exps_;
    std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const QPoly& p);

/// Truncated power series: a QPoly known exactly below `order`.
class QSeries {
public:
    QSeries(QPoly poly, QExponent order);

    static QSeries zero(const QExponent& order) { return {QPoly(), order}; }
    static QSeries one(const QExponent& order) { return {QPoly::constant(1), order}; }

    [[nodiscard]] const QPoly& poly() const noexcept { return poly_; }
    [[nodiscard]] const QExponent& order() const noexcept { return order_; }
    [[nodiscard]] Integer coefficient(const QExponent& e) const { return poly_.coefficient(e); }

    QSeries& operator+=(const QSeries& rhs);
    QSeries& operator-=(const QSeries& rhs);
    QSeries& operator*=(const QSeries& rhs);
    QSeries& operator*=(const QPoly& rhs);
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(QSeries a, const QSeries& b) { return a *= b; }
    friend QSeries operator*(QSeries a, const QPoly& b) { return a *= b; }
    friend QSeries operator*(const QPoly& a, QSeries b) { return b *= a; }
    friend bool operator==(const QSeries& a, const QSeries& b) = default;

    /// Multiplication by q^r; the known range moves with it.
    [[nodiscard]] QSeries shifted(const QExponent& r) const;
    [[nodiscard]] QSeries truncated(const QExponent& order) const;
    [[nodiscard]] std::string to_string() const;

private:
    QPoly poly_;
    QExponent order_;
};

std::ostream& operator<<(std::ostream& os, const QSeries& s);

// Named operations.

QPoly poly_add(const QPoly& a, const QPoly& b);
QPoly poly_mul(const QPoly& a, const QPoly& b);
QPoly poly_substitute_qinv(const QPoly& p);
QPoly poly_shift(const QPoly& p, const QExponent& r);
Integer poly_eval_q1(const QPoly& p);
QSeries series_from_poly(const QPoly& p, const QExponent& order);

/// Multiplicative inverse up to the series order. Throws NonUnitConstantTerm
/// unless the lowest term is a constant +1 or -1.
QSeries series_inverse(const QSeries& s);

/// Truncated product prod_{j<count} (1 - sign * q^(a + j*step)); count
/// nullopt means an infinite product, which needs step > 0 and a > 0.
QSeries pochhammer(const QExponent& a, int sign, const QExponent& step,
                   std::optional<std::int64_t> count, const QExponent& order);

/// 1/(q;q)_n to the given order (n nullopt: 1/(q;q)_inf).
QSeries inverse_q_pochhammer(std::optional<std::int64_t> n, const QExponent& order);

/// true iff a and b agree on every exponent < order.
bool agree_below(const QPoly& a, const QPoly& b, const QExponent& order);

/// Smallest exponent < order where a and b differ.
std::optional<QExponent> first_difference(const QPoly& a, const QPoly& b);

}  // namespace qtrin
