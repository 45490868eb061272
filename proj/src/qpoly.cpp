#include "qtrin/qpoly.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace qtrin {

namespace {

constexpr std::int64_t kMaxI64 = std::numeric_limits<std::int64_t>::max();
constexpr std::int64_t kMinI64 = std::numeric_limits<std::int64_t>::min();

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("q-exponent grid overflow");
    return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("q-exponent grid overflow");
    return r;
}

std::int64_t checked_lcm(std::int64_t a, std::int64_t b) {
    return checked_mul(a / std::gcd(a, b), b);
}

std::int64_t to_i64(const Integer& v) {
    if (!v.is_small()) throw std::overflow_error("q-exponent grid overflow");
    return v.to_int64();
}

/// Exclusive bound K on grid numerators: k/den < order  <=>  k < K.
std::int64_t grid_cutoff(const QExponent& order, std::int64_t den) {
    const Integer k = (order * Rational(den)).ceil();
    if (!k.is_small()) return k.sign() > 0 ? kMaxI64 : kMinI64;
    return k.to_int64();
}

/// Exponent as a numerator over `den`; nullopt when not on that grid.
std::optional<std::int64_t> on_grid(const QExponent& e, std::int64_t den) {
    const Rational scaled = e * Rational(den);
    if (!scaled.is_integer()) return std::nullopt;
    const Integer n = scaled.numerator();
    if (!n.is_small()) return std::nullopt;
    return n.to_int64();
}

void append_exponent(std::string& out, std::int64_t num, std::int64_t den) {
    if (den == 1) {
        if (num == 1) {
            out += "q";
        } else if (num >= 0) {
            out += "q^" + std::to_string(num);
        } else {
            out += "q^(" + std::to_string(num) + ")";
        }
    } else {
        out += "q^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
    }
}

std::string exponent_string(const QExponent& e) {
    std::string s;
    append_exponent(s, to_i64(e.numerator()), to_i64(e.denominator()));
    return s;
}

std::int64_t gcd_of_steps(std::span<const std::int64_t> exps, std::int64_t scale) {
    std::int64_t g = 0;
    for (std::size_t i = 1; i < exps.size() && g != 1; ++i) {
        g = std::gcd(g, checked_mul(exps[i] - exps[0], scale));
    }
    return g;
}

}  // namespace

QPoly QPoly::constant(const Integer& c) { return monomial(QExponent(0), c); }

QPoly QPoly::monomial(const QExponent& e, const Integer& c) {
    QPoly p;
    if (c.is_zero()) return p;
    p.den_ = to_i64(e.denominator());
    p.exps_.push_back(to_i64(e.numerator()));
    p.coeffs_.push_back(c);
    return p;
}

QPoly QPoly::from_terms(std::span<const std::pair<QExponent, Integer>> terms) {
    QPoly result;
    for (const auto& [e, c] : terms) result += monomial(e, c);
    return result;
}

QPoly QPoly::from_dense(std::int64_t offset, std::span<const Integer> coeffs) {
    QPoly p;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        p.exps_.push_back(checked_add(offset, static_cast<std::int64_t>(i)));
        p.coeffs_.push_back(coeffs[i]);
    }
    return p;
}

QPoly QPoly::from_grid(std::int64_t den, std::vector<std::int64_t> exps,
                       std::vector<Integer> coeffs) {
    if (den <= 0) throw std::invalid_argument("grid denominator must be positive");
    if (exps.size() != coeffs.size()) throw std::invalid_argument("grid size mismatch");
    QPoly p;
    p.den_ = den;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (i > 0 && exps[i] <= exps[i - 1]) {
            throw std::invalid_argument("grid exponents must be strictly increasing");
        }
        if (coeffs[i].is_zero()) continue;
        p.exps_.push_back(exps[i]);
        p.coeffs_.push_back(std::move(coeffs[i]));
    }
    p.normalize();
    return p;
}

void QPoly::normalize() {
    if (exps_.empty()) {
        den_ = 1;
        return;
    }
    std::int64_t g = den_;
    for (std::int64_t e : exps_) {
        g = std::gcd(g, e);
        if (g == 1) return;
    }
    den_ /= g;
    for (auto& e : exps_) e /= g;
}

void QPoly::rescale(std::int64_t new_den) {
    if (new_den == den_) return;
    const std::int64_t f = new_den / den_;
    for (auto& e : exps_) e = checked_mul(e, f);
    den_ = new_den;
}

std::vector<QPoly::Term> QPoly::terms() const {
    std::vector<Term> out;
    out.reserve(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        out.push_back({Rational(exps_[i], den_), coeffs_[i]});
    }
    return out;
}

Integer QPoly::coefficient(const QExponent& e) const {
    const auto k = on_grid(e, den_);
    if (!k) return 0;
    const auto it = std::lower_bound(exps_.begin(), exps_.end(), *k);
    if (it == exps_.end() || *it != *k) return 0;
    return coeffs_[static_cast<std::size_t>(it - exps_.begin())];
}

QExponent QPoly::min_exponent() const {
    if (is_zero()) throw std::domain_error("zero polynomial has no exponents");
    return {exps_.front(), den_};
}

QExponent QPoly::max_exponent() const {
    if (is_zero()) throw std::domain_error("zero polynomial has no exponents");
    return {exps_.back(), den_};
}

bool QPoly::all_coefficients_nonnegative() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c.sign() >= 0; });
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
    if (rhs.is_zero()) return *this;
    if (is_zero()) return *this = rhs;
    const std::int64_t d = checked_lcm(den_, rhs.den_);
    rescale(d);
    const std::int64_t f = d / rhs.den_;

    std::vector<std::int64_t> exps;
    std::vector<Integer> coeffs;
    exps.reserve(exps_.size() + rhs.exps_.size());
    coeffs.reserve(exps_.size() + rhs.exps_.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < exps_.size() || j < rhs.exps_.size()) {
        const std::int64_t rj = j < rhs.exps_.size() ? checked_mul(rhs.exps_[j], f) : kMaxI64;
        if (j >= rhs.exps_.size() || (i < exps_.size() && exps_[i] < rj)) {
            exps.push_back(exps_[i]);
            coeffs.push_back(std::move(coeffs_[i]));
            ++i;
        } else if (i >= exps_.size() || rj < exps_[i]) {
            exps.push_back(rj);
            coeffs.push_back(rhs.coeffs_[j]);
            ++j;
        } else {
            Integer c = std::move(coeffs_[i]);
            c += rhs.coeffs_[j];
            if (!c.is_zero()) {
                exps.push_back(exps_[i]);
                coeffs.push_back(std::move(c));
            }
            ++i;
            ++j;
        }
    }
    exps_ = std::move(exps);
    coeffs_ = std::move(coeffs);
    normalize();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& rhs) { return *this += -rhs; }

QPoly& QPoly::operator*=(const QPoly& rhs) { return *this = multiply_truncated(*this, rhs, nullptr); }

void QPoly::add_scaled(const QPoly& rhs, const QExponent& e, const Integer& c) {
    if (c.is_zero() || rhs.is_zero()) return;
    QPoly t = rhs.shifted(e);
    if (c != Integer(1)) {
        for (auto& x : t.coeffs_) x *= c;
    }
    *this += t;
}

QPoly operator*(const QPoly& a, const QPoly& b) { return multiply_truncated(a, b, nullptr); }

QPoly operator-(QPoly a) {
    for (auto& c : a.coeffs_) c.negate();
    return a;
}

QPoly multiply_truncated(const QPoly& a, const QPoly& b, const QExponent* order) {
    if (a.is_zero() || b.is_zero()) return {};
    const std::int64_t d = checked_lcm(a.den_, b.den_);
    const std::int64_t fa = d / a.den_;
    const std::int64_t fb = d / b.den_;
    const std::int64_t cutoff = order ? grid_cutoff(*order, d) : kMaxI64;

    const std::int64_t lo = checked_add(checked_mul(a.exps_.front(), fa), checked_mul(b.exps_.front(), fb));
    std::int64_t hi = checked_add(checked_mul(a.exps_.back(), fa), checked_mul(b.exps_.back(), fb));
    if (order) hi = std::min(hi, cutoff == kMinI64 ? cutoff : cutoff - 1);
    if (hi < lo) return {};

    std::int64_t step = std::gcd(gcd_of_steps(a.exps_, fa), gcd_of_steps(b.exps_, fb));
    if (step == 0) step = 1;

    const std::size_t na = a.exps_.size();
    const std::size_t nb = b.exps_.size();
    const auto slots = static_cast<std::uint64_t>((hi - lo) / step) + 1;

    std::vector<std::int64_t> exps;
    std::vector<Integer> coeffs;
    if (slots <= 8 * static_cast<std::uint64_t>(na * nb) + 4096) {
        std::vector<Integer> acc(slots);
        for (std::size_t i = 0; i < na; ++i) {
            const std::int64_t ea = a.exps_[i] * fa;
            for (std::size_t j = 0; j < nb; ++j) {
                const std::int64_t e = ea + b.exps_[j] * fb;
                if (e > hi) break;
                acc[static_cast<std::size_t>((e - lo) / step)].add_product(a.coeffs_[i], b.coeffs_[j]);
            }
        }
        for (std::size_t s = 0; s < slots; ++s) {
            if (acc[s].is_zero()) continue;
            exps.push_back(lo + static_cast<std::int64_t>(s) * step);
            coeffs.push_back(std::move(acc[s]));
        }
    } else {
        std::vector<std::pair<std::int64_t, Integer>> prods;
        for (std::size_t i = 0; i < na; ++i) {
            const std::int64_t ea = a.exps_[i] * fa;
            for (std::size_t j = 0; j < nb; ++j) {
                const std::int64_t e = ea + b.exps_[j] * fb;
                if (e > hi) break;
                prods.emplace_back(e, a.coeffs_[i] * b.coeffs_[j]);
            }
        }
        std::sort(prods.begin(), prods.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        for (auto& [e, c] : prods) {
            if (!exps.empty() && exps.back() == e) {
                coeffs.back() += c;
            } else {
                if (!coeffs.empty() && coeffs.back().is_zero()) {
                    exps.pop_back();
                    coeffs.pop_back();
                }
                exps.push_back(e);
                coeffs.push_back(std::move(c));
            }
        }
        if (!coeffs.empty() && coeffs.back().is_zero()) {
            exps.pop_back();
            coeffs.pop_back();
        }
    }
    QPoly out;
    out.den_ = d;
    out.exps_ = std::move(exps);
    out.coeffs_ = std::move(coeffs);
    out.normalize();
    return out;
}

QPoly QPoly::shifted(const QExponent& r) const {
    if (is_zero()) return {};
    const std::int64_t rd = to_i64(r.denominator());
    const std::int64_t rn = to_i64(r.numerator());
    QPoly out = *this;
    const std::int64_t d = checked_lcm(den_, rd);
    out.rescale(d);
    const std::int64_t delta = checked_mul(rn, d / rd);
    for (auto& e : out.exps_) e = checked_add(e, delta);
    out.normalize();
    return out;
}

QPoly QPoly::substituted_qinv() const {
    QPoly out;
    out.den_ = den_;
    out.exps_.reserve(exps_.size());
    out.coeffs_.reserve(exps_.size());
    for (std::size_t i = exps_.size(); i-- > 0;) {
        out.exps_.push_back(-exps_[i]);
        out.coeffs_.push_back(coeffs_[i]);
    }
    return out;
}

QPoly QPoly::truncated(const QExponent& order) const {
    const std::int64_t cutoff = grid_cutoff(order, den_);
    const auto end = std::lower_bound(exps_.begin(), exps_.end(), cutoff);
    const auto n = static_cast<std::size_t>(end - exps_.begin());
    if (n == exps_.size()) return *this;
    QPoly out;
    out.den_ = den_;
    out.exps_.assign(exps_.begin(), end);
    out.coeffs_.assign(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n));
    out.normalize();
    return out;
}

Integer QPoly::eval_at_one() const {
    Integer s;
    for (const auto& c : coeffs_) s += c;
    return s;
}

std::string QPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        const Integer& c = coeffs_[i];
        const bool negative = c.sign() < 0;
        if (i == 0) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const Integer mag = negative ? -c : c;
        const std::int64_t g = std::gcd(exps_[i], den_);
        const std::int64_t num = exps_[i] / g;
        const std::int64_t den = den_ / g;
        if (num == 0) {
            out += mag.to_string();
            continue;
        }
        if (mag != Integer(1)) out += mag.to_string() + "*";
        append_exponent(out, num, den);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.to_string(); }

// --- QSeries ---------------------------------------------------------------

QSeries::QSeries(QPoly poly, QExponent order)
    : poly_(poly.truncated(order)), order_(std::move(order)) {}

QSeries& QSeries::operator+=(const QSeries& rhs) {
    order_ = std::min(order_, rhs.order_);
    poly_ = (poly_ + rhs.poly_).truncated(order_);
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& rhs) {
    order_ = std::min(order_, rhs.order_);
    poly_ = (poly_ - rhs.poly_).truncated(order_);
    return *this;
}

QSeries& QSeries::operator*=(const QSeries& rhs) {
    QExponent order = std::min(order_, rhs.order_);
    // With a negative leading exponent the unknown tail of the other factor
    // reaches below min(orders).
    if (!poly_.is_zero() && poly_.min_exponent().sign() < 0) {
        order = std::min(order, rhs.order_ + poly_.min_exponent());
    }
    if (!rhs.poly_.is_zero() && rhs.poly_.min_exponent().sign() < 0) {
        order = std::min(order, order_ + rhs.poly_.min_exponent());
    }
    poly_ = multiply_truncated(poly_, rhs.poly_, &order);
    order_ = std::move(order);
    return *this;
}

QSeries& QSeries::operator*=(const QPoly& rhs) {
    if (!rhs.is_zero() && rhs.min_exponent().sign() < 0) order_ += rhs.min_exponent();
    poly_ = multiply_truncated(poly_, rhs, &order_);
    return *this;
}

QSeries QSeries::shifted(const QExponent& r) const { return {poly_.shifted(r), order_ + r}; }

QSeries QSeries::truncated(const QExponent& order) const {
    return {poly_, std::min(order, order_)};
}

std::string QSeries::to_string() const {
    std::string s = poly_.is_zero() ? std::string() : poly_.to_string() + " + ";
    return s + "O(" + exponent_string(order_) + ")";
}

std::ostream& operator<<(std::ostream& os, const QSeries& s) { return os << s.to_string(); }

// --- named operations --------------------------------------------------------

QPoly poly_add(const QPoly& a, const QPoly& b) { return a + b; }
QPoly poly_mul(const QPoly& a, const QPoly& b) { return a * b; }
QPoly poly_substitute_qinv(const QPoly& p) { return p.substituted_qinv(); }
QPoly poly_shift(const QPoly& p, const QExponent& r) { return p.shifted(r); }
Integer poly_eval_q1(const QPoly& p) { return p.eval_at_one(); }
QSeries series_from_poly(const QPoly& p, const QExponent& order) { return {p, order}; }

QSeries series_inverse(const QSeries& s) {
    const QPoly& p = s.poly();
    if (p.is_zero() || p.min_exponent() != QExponent(0)) {
        throw NonUnitConstantTerm("series has no constant term");
    }
    const Integer c0 = p.coefficients().front();
    if (c0 != Integer(1) && c0 != Integer(-1)) {
        throw NonUnitConstantTerm("constant term is " + c0.to_string() + ", not +1 or -1");
    }
    const std::int64_t den = p.grid_denominator();
    const std::int64_t cutoff = grid_cutoff(s.order(), den);
    if (cutoff <= 0) return QSeries::zero(s.order());
    const auto exps = p.grid_exponents();
    const auto cs = p.coefficients();

    std::vector<Integer> t(static_cast<std::size_t>(cutoff));
    t[0] = c0;
    for (std::int64_t k = 1; k < cutoff; ++k) {
        Integer acc;
        for (std::size_t i = 1; i < exps.size() && exps[i] <= k; ++i) {
            acc.add_product(cs[i], t[static_cast<std::size_t>(k - exps[i])]);
        }
        if (c0 == Integer(1)) acc.negate();
        t[static_cast<std::size_t>(k)] = std::move(acc);
    }
    std::vector<std::int64_t> grid(t.size());
    std::iota(grid.begin(), grid.end(), std::int64_t{0});
    return {QPoly::from_grid(den, std::move(grid), std::move(t)), s.order()};
}

QSeries pochhammer(const QExponent& a, int sign, const QExponent& step,
                   std::optional<std::int64_t> count, const QExponent& order) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("pochhammer sign must be +1 or -1");
    QPoly acc = QPoly::constant(1);
    auto factor = [&](const QExponent& e) {
        return QPoly::constant(1) - QPoly::monomial(e, Integer(sign));
    };
    if (!count) {
        if (step.sign() <= 0 || a.sign() <= 0) {
            throw DivergentProduct("infinite product needs a positive base exponent and step");
        }
        for (QExponent e = a; e < order; e += step) acc = multiply_truncated(acc, factor(e), &order);
        return {acc, order};
    }
    if (*count < 0) throw std::invalid_argument("pochhammer length must be nonnegative");
    const bool nonnegative = a.sign() >= 0 && step.sign() >= 0;
    QExponent e = a;
    for (std::int64_t j = 0; j < *count; ++j, e += step) {
        acc = multiply_truncated(acc, factor(e), nonnegative ? &order : nullptr);
    }
    return {acc, order};
}

QSeries inverse_q_pochhammer(std::optional<std::int64_t> n, const QExponent& order) {
    const std::int64_t cutoff = grid_cutoff(order, 1);
    if (cutoff <= 0) return QSeries::zero(order);
    if (n && *n < 0) throw std::invalid_argument("pochhammer length must be nonnegative");
    const auto len = static_cast<std::size_t>(cutoff);
    std::vector<Integer> p(len);
    p[0] = 1;
    const std::int64_t max_part = n ? std::min<std::int64_t>(*n, cutoff - 1) : cutoff - 1;
    for (std::int64_t part = 1; part <= max_part; ++part) {
        for (auto k = static_cast<std::size_t>(part); k < len; ++k) {
            p[k] += p[k - static_cast<std::size_t>(part)];
        }
    }
    return {QPoly::from_dense(0, p), order};
}

bool agree_below(const QPoly& a, const QPoly& b, const QExponent& order) {
    return a.truncated(order) == b.truncated(order);
}

std::optional<QExponent> first_difference(const QPoly& a, const QPoly& b) {
    const QPoly d = a - b;
    if (d.is_zero()) return std::nullopt;
    return d.min_exponent();
}

}  // namespace qtrin
