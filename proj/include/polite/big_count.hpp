#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace polite {

/// Arbitrary-precision nonnegative count.
///
/// Thin value wrapper over GMP's mpz_class. Subtraction is deliberately
/// absent: every count in this library is built from sums and products.
class BigCount {
public:
    BigCount() = default;
    BigCount(std::uint64_t v) : value_(static_cast<unsigned long>(v)) {}  // NOLINT implicit
    explicit BigCount(mpz_class v);

    /// Parses a decimal string; throws std::invalid_argument on bad input.
    static BigCount from_string(const std::string& digits);

    /// 2^e.
    static BigCount pow2(std::uint64_t e);

    BigCount& operator+=(const BigCount& o) { value_ += o.value_; return *this; }
    BigCount& operator*=(const BigCount& o) { value_ *= o.value_; return *this; }
    friend BigCount operator+(BigCount a, const BigCount& b) { a += b; return a; }
    friend BigCount operator*(BigCount a, const BigCount& b) { a *= b; return a; }

    friend bool operator==(const BigCount& a, const BigCount& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const BigCount& a, const BigCount& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    bool is_even() const { return mpz_even_p(value_.get_mpz_t()) != 0; }
    bool fits_u64() const;
    std::uint64_t to_u64() const;  // throws std::overflow_error
    std::string to_string() const { return value_.get_str(); }

    const mpz_class& raw() const { return value_; }

    friend std::ostream& operator<<(std::ostream& os, const BigCount& c) { return os << c.to_string(); }

private:
    mpz_class value_{0};
};

}  // namespace polite
