#include "qtrin/integer.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace qtrin {

namespace {

bool mpz_fits_int64(const mpz_class& v) {
    static const mpz_class lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
    static const mpz_class hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
    return v >= lo && v <= hi;
}

std::int64_t mpz_to_int64(const mpz_class& v) {
    // mpz_get_si is only guaranteed for long; long is 64-bit on the supported platforms.
    static_assert(sizeof(long) == sizeof(std::int64_t));
    return static_cast<std::int64_t>(mpz_get_si(v.get_mpz_t()));
}

mpz_class int64_to_mpz(std::int64_t v) {
    static_assert(sizeof(long) == sizeof(std::int64_t));
    return mpz_class(static_cast<long>(v));
}

}  // namespace

Integer::Integer(const mpz_class& v) { assign_mpz(v); }

Integer::Integer(const Integer& other) : small_(other.small_) {
    if (other.big_) big_ = std::make_unique<mpz_class>(*other.big_);
}

Integer& Integer::operator=(const Integer& other) {
    if (this == &other) return *this;
    small_ = other.small_;
    if (other.big_) {
        if (big_) *big_ = *other.big_;
        else big_ = std::make_unique<mpz_class>(*other.big_);
    } else {
        big_.reset();
    }
    return *this;
}

Integer Integer::from_string(std::string_view text) {
    mpz_class v;
    if (v.set_str(std::string(text), 10) != 0) {
        throw std::invalid_argument("not an integer: " + std::string(text));
    }
    return Integer(v);
}

void Integer::assign_mpz(const mpz_class& v) {
    if (mpz_fits_int64(v)) {
        small_ = mpz_to_int64(v);
        big_.reset();
    } else {
        small_ = 0;
        if (big_) *big_ = v;
        else big_ = std::make_unique<mpz_class>(v);
    }
}

int Integer::sign() const noexcept {
    if (big_) return sgn(*big_);
    return (small_ > 0) - (small_ < 0);
}

std::int64_t Integer::to_int64() const {
    if (big_) throw std::overflow_error("integer does not fit in 64 bits");
    return small_;
}

mpz_class Integer::to_mpz() const { return big_ ? *big_ : int64_to_mpz(small_); }

std::string Integer::to_string() const { return big_ ? big_->get_str() : std::to_string(small_); }

Integer& Integer::operator+=(const Integer& rhs) {
    if (!big_ && !rhs.big_) {
        std::int64_t r;
        if (!__builtin_add_overflow(small_, rhs.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    assign_mpz(to_mpz() + rhs.to_mpz());
    return *this;
}

Integer& Integer::operator-=(const Integer& rhs) {
    if (!big_ && !rhs.big_) {
        std::int64_t r;
        if (!__builtin_sub_overflow(small_, rhs.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    assign_mpz(to_mpz() - rhs.to_mpz());
    return *this;
}

Integer& Integer::operator*=(const Integer& rhs) {
    if (!big_ && !rhs.big_) {
        std::int64_t r;
        if (!__builtin_mul_overflow(small_, rhs.small_, &r)) {
            small_ = r;
            return *this;
        }
    }
    assign_mpz(to_mpz() * rhs.to_mpz());
    return *this;
}

void Integer::add_product(const Integer& a, const Integer& b) {
    if (!big_ && !a.big_ && !b.big_) {
        std::int64_t p;
        std::int64_t r;
        if (!__builtin_mul_overflow(a.small_, b.small_, &p) &&
            !__builtin_add_overflow(small_, p, &r)) {
            small_ = r;
            return;
        }
    }
    mpz_class acc = to_mpz();
    mpz_class pa = a.to_mpz();
    mpz_class pb = b.to_mpz();
    mpz_addmul(acc.get_mpz_t(), pa.get_mpz_t(), pb.get_mpz_t());
    assign_mpz(acc);
}

void Integer::negate() {
    if (!big_ && small_ != std::numeric_limits<std::int64_t>::min()) {
        small_ = -small_;
        return;
    }
    assign_mpz(-to_mpz());
}

bool operator==(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical form: one fits in int64, the other does not
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
    const int c = cmp(a.to_mpz(), b.to_mpz());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

}  // namespace qtrin
