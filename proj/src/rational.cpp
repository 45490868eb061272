#include "qtrin/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace qtrin {

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("zero denominator");
    value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    value_.canonicalize();
}

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational::Rational(const Integer& num, const Integer& den) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    value_ = mpq_class(num.to_mpz(), den.to_mpz());
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    while (!s.empty() && s.front() == ' ') s.erase(s.begin());
    while (!s.empty() && s.back() == ' ') s.pop_back();
    if (s.empty()) throw std::invalid_argument("empty rational");
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
    if (v.get_den() == 0) throw std::domain_error("zero denominator");
    return Rational(v);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.value_ == 0) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

Integer Rational::ceil() const {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return Integer(r);
}

Integer Rational::floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return Integer(r);
}

std::string Rational::to_string() const { return value_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

}  // namespace qtrin
