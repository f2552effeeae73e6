#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "polite/big_count.hpp"

namespace polite {

/// prod_{j=1}^{m'} (2^(j-1))! with m' = floor(log2((p-1)/4)); 1 when m' < 1.
BigCount lemma61_product(std::uint64_t p);

/// Lower bound U on a(n), n >= 2. Throws std::domain_error for n < 2.
BigCount lower_bound_U(std::uint64_t n);

/// Upper bound O on a(n), n >= 1.
BigCount upper_bound_O(std::uint64_t n);

/// floor((p-1)/2) <= b(p,1).
std::uint64_t b1_lower(std::uint64_t p);

/// b(p,1) <= ceil(2(p-1)/3).
std::uint64_t b1_upper(std::uint64_t p);

/// One row of the bound comparison table.
struct BoundsRow {
    std::uint64_t n;
    std::optional<BigCount> lower;  // absent for n = 1
    BigCount count;
    BigCount upper;
    BigCount n_factorial;

    std::optional<mpq_class> lower_ratio() const;
    mpq_class upper_ratio() const;
};

BoundsRow bounds_row(std::uint64_t n);

/// Renders a nonnegative rational with exactly `places` decimals, rounding half up.
std::string format_decimal(const mpq_class& value, unsigned places);

}  // namespace polite
