#include "polite/bounds.hpp"

#include <stdexcept>

#include "polite/counting.hpp"
#include "polite/factorial.hpp"

namespace polite {

namespace {

// floor(log2((p-1)/4)) clamped at 0: the products below are empty for any m < 1
// anyway, so the negative branch never needs to be represented.
std::uint64_t quarter_band(std::uint64_t p) {
    if (p < 5) return 0;
    std::uint64_t m = 0;
    std::uint64_t step = 4;
    while (step <= (p - 1) / 2) {
        step *= 2;
        ++m;
    }
    return m;
}

BigCount doubling_factorials(std::uint64_t upto) {
    BigCount prod(1);
    for (std::uint64_t j = 1; j <= upto; ++j) {
        prod *= factorial(std::uint64_t{1} << (j - 1));
    }
    return prod;
}

std::uint64_t ceil_two_thirds(std::uint64_t x) { return (2 * x + 2) / 3; }

}  // namespace

BigCount lemma61_product(std::uint64_t p) {
    return doubling_factorials(quarter_band(p));
}

BigCount lower_bound_U(std::uint64_t n) {
    if (n < 2) {
        throw std::domain_error("lower bound U is defined for n >= 2");
    }
    BigCount sum;
    for (std::uint64_t i = (n + 1) / 2 + 1; i <= n; ++i) {
        const std::uint64_t ends = (i - 1) / 2 + (n - i) / 2;
        sum += factorial(ends) * doubling_factorials(quarter_band(i));
    }
    return BigCount(2) * sum;
}

BigCount upper_bound_O(std::uint64_t n) {
    if (n < 1) {
        throw std::domain_error("upper bound O is defined for n >= 1");
    }
    BigCount sum;
    for (std::uint64_t i = 1; i <= n; ++i) {
        const std::uint64_t ones = ceil_two_thirds(i - 1) + ceil_two_thirds(n - i);
        sum += factorial(ones) * factorial(n - ones);
    }
    return sum;
}

std::uint64_t b1_lower(std::uint64_t p) { return p == 0 ? 0 : (p - 1) / 2; }

std::uint64_t b1_upper(std::uint64_t p) { return p == 0 ? 0 : ceil_two_thirds(p - 1); }

std::optional<mpq_class> BoundsRow::lower_ratio() const {
    if (!lower) return std::nullopt;
    mpq_class q(lower->raw(), count.raw());
    q.canonicalize();
    return q;
}

mpq_class BoundsRow::upper_ratio() const {
    mpq_class q(upper.raw(), count.raw());
    q.canonicalize();
    return q;
}

BoundsRow bounds_row(std::uint64_t n) {
    BoundsRow row{n, std::nullopt, a(n), upper_bound_O(n), factorial(n)};
    if (n >= 2) {
        row.lower = lower_bound_U(n);
    }
    return row;
}

std::string format_decimal(const mpq_class& value, unsigned places) {
    if (sgn(value) < 0) {
        throw std::domain_error("format_decimal expects a nonnegative value");
    }
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
    // round(value * 10^places) = floor((2 * num * scale + den) / (2 * den))
    mpz_class scaled = (2 * value.get_num() * scale + value.get_den()) / (2 * value.get_den());

    std::string digits = scaled.get_str();
    if (places == 0) return digits;
    if (digits.size() <= places) {
        digits.insert(0, places + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - places, ".");
    return digits;
}

}  // namespace polite
