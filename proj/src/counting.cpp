#include "polite/counting.hpp"

#include <stdexcept>
#include <string>

#include "polite/closed_form.hpp"
#include "polite/factorial.hpp"

namespace polite {

namespace {

void require_seats(std::uint64_t n, std::uint64_t min, const char* what) {
    if (n < min) {
        throw std::domain_error(std::string(what) + " is defined for n >= " + std::to_string(min) +
                                ", got n=" + std::to_string(n));
    }
}

void require_seat_index(std::uint64_t n, std::uint64_t i) {
    if (i < 1 || i > n) {
        throw std::out_of_range("seat index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    }
}

// b and d of the two halves a first person on seat i leaves behind.
struct PairTotals {
    std::uint64_t b;
    std::uint64_t d;
};

PairTotals pair_totals(std::uint64_t n, std::uint64_t i, std::uint64_t j) {
    const std::uint64_t mirror = n + 1 - i;
    return {b(i, j) + b(mirror, j), d(i, j) + d(mirror, j)};
}

// 2^d * d! * (b-d)!  -- serve one seat of every pair set first, then the rest.
BigCount pairs_first_factor(std::uint64_t bsum, std::uint64_t dsum) {
    return BigCount::pow2(dsum) * factorial(dsum) * factorial(bsum - dsum);
}

// prod_j 2^d(p,j) * d(p,j)! * (b(p,j)-d(p,j))! for a lone left-anchored block of p seats.
BigCount single_block_product(std::uint64_t n, std::uint64_t p) {
    BigCount prod(1);
    for (std::uint64_t j = 1; j < n; ++j) {
        prod *= pairs_first_factor(b(p, j), d(p, j));
    }
    return prod;
}

// prod_{j>=2} 2^(d+d) * (b+b)!
BigCount plain_tail(std::uint64_t n, std::uint64_t i) {
    BigCount prod(1);
    for (std::uint64_t j = 2; j < n; ++j) {
        const auto t = pair_totals(n, i, j);
        prod *= BigCount::pow2(t.d) * factorial(t.b);
    }
    return prod;
}

}  // namespace

BigCount plain_summand(std::uint64_t n, std::uint64_t i, DistanceOnePairs pairs) {
    require_seat_index(n, i);
    BigCount prod(1);
    for (std::uint64_t j = 1; j < n; ++j) {
        const auto t = pair_totals(n, i, j);
        const std::uint64_t exponent = (j == 1 && pairs == DistanceOnePairs::kIgnored) ? 0 : t.d;
        prod *= BigCount::pow2(exponent) * factorial(t.b);
    }
    return prod;
}

BigCount longest_run_summand(std::uint64_t n, std::uint64_t i) {
    require_seat_index(n, i);
    BigCount prod(1);
    for (std::uint64_t j = 1; j < n; ++j) {
        const auto t = pair_totals(n, i, j);
        prod *= pairs_first_factor(t.b, t.d);
    }
    return prod;
}

BigCount a(std::uint64_t n) {
    require_seats(n, 1, "a");
    BigCount sum;
    for (std::uint64_t i = 1; i <= n; ++i) {
        sum += plain_summand(n, i, DistanceOnePairs::kIgnored);
    }
    return sum;
}

BigCount a166079(std::uint64_t n) {
    require_seats(n, 1, "A166079");
    return BigCount(n - b(n, 1));
}

BigCount a095236(std::uint64_t n) {
    require_seats(n, 1, "A095236");
    BigCount sum;
    for (std::uint64_t i = 1; i <= n; ++i) {
        sum += longest_run_summand(n, i);
    }
    return sum;
}

BigCount a095240(std::uint64_t n) {
    require_seats(n, 2, "A095240");
    return BigCount(2) * single_block_product(n, n);
}

BigCount a095912(std::uint64_t n) {
    require_seats(n, 1, "A095912");
    if (n < 4) {
        return a095236(n);
    }
    BigCount sum = BigCount(2) * (single_block_product(n, n - 1) + single_block_product(n, n));
    for (std::uint64_t i = 3; i + 2 <= n; ++i) {
        sum += longest_run_summand(n, i);
    }
    return sum;
}

BigCount a_extended(std::uint64_t n) {
    require_seats(n, 1, "A_n");
    if (n < 4) {
        return a(n);
    }

    // First person at an end.
    const std::uint64_t bn = b(n, 1);
    const std::uint64_t dn = d(n, 1);
    BigCount sum = BigCount(2) * pairs_first_factor(bn, dn) * plain_tail(n, 1);

    // First person on the second seat: the lone edge seat joins the pair sets.
    const std::uint64_t bl = b(n - 1, 1);
    const std::uint64_t dl = d(n - 1, 1);
    sum += BigCount(2) * BigCount::pow2(dl) * factorial(dl + 1) * factorial(bl - dl) * plain_tail(n, 2);

    for (std::uint64_t i = 3; i + 2 <= n; ++i) {
        const auto t = pair_totals(n, i, 1);
        sum += pairs_first_factor(t.b, t.d) * plain_tail(n, i);
    }
    return sum;
}

}  // namespace polite
