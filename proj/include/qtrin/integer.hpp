#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qtrin {

/// Arbitrary-precision integer with an inline int64 fast path.
///
/// Values that fit in a signed 64-bit word are stored inline; anything
/// larger spills into a heap-allocated GMP integer. The representation is
/// canonical: `big_` is engaged iff the value does not fit in int64.
class Integer {
public:
    Integer() noexcept = default;
    Integer(std::int64_t v) noexcept : small_(v) {}  // NOLINT(implicit)
    Integer(int v) noexcept : small_(v) {}           // NOLINT(implicit)
    explicit Integer(const mpz_class& v);

    Integer(const Integer& other);
    Integer(Integer&& other) noexcept = default;
    Integer& operator=(const Integer& other);
    Integer& operator=(Integer&& other) noexcept = default;
    ~Integer() = default;

    static Integer from_string(std::string_view text);

    [[nodiscard]] bool is_zero() const noexcept { return !big_ && small_ == 0; }
    [[nodiscard]] bool is_small() const noexcept { return !big_; }
    [[nodiscard]] int sign() const noexcept;
    [[nodiscard]] std::int64_t to_int64() const;  // throws std::overflow_error
    [[nodiscard]] mpz_class to_mpz() const;
    [[nodiscard]] std::string to_string() const;

    Integer& operator+=(const Integer& rhs);
    Integer& operator-=(const Integer& rhs);
    Integer& operator*=(const Integer& rhs);
    /// this += a * b without a temporary on the fast path.
    void add_product(const Integer& a, const Integer& b);
    void negate();

    friend Integer operator+(Integer lhs, const Integer& rhs) { return lhs += rhs; }
    friend Integer operator-(Integer lhs, const Integer& rhs) { return lhs -= rhs; }
    friend Integer operator*(Integer lhs, const Integer& rhs) { return lhs *= rhs; }
    friend Integer operator-(Integer v) {
        v.negate();
        return v;
    }

    friend bool operator==(const Integer& a, const Integer& b);
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b);

private:
    void assign_mpz(const mpz_class& v);

    std::int64_t small_ = 0;
    std::unique_ptr<mpz_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Integer& v);

}  // namespace qtrin
