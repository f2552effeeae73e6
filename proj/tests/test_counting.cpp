#include <gtest/gtest.h>

#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "polite/closed_form.hpp"
#include "polite/counting.hpp"
#include "polite/factorial.hpp"
#include "polite/oracle.hpp"

namespace polite {
namespace {

// Frozen from an independent seat-level enumerator (outside this code base).
const std::vector<std::uint64_t> kA095236 = {1, 2, 4, 8, 16, 36, 136, 216, 672, 2592, 10656, 35904, 167808, 426240};
const std::vector<std::uint64_t> kA095912 = {1, 2, 4, 6, 12, 28, 104, 152, 528, 2208, 9120, 23616, 130944, 278784};
const std::vector<std::uint64_t> kAExt = {1, 2, 4, 6, 16, 28, 120, 264, 576, 2784, 11040, 37440, 204672, 679680};
const std::vector<std::uint64_t> kA095240 = {2, 2, 4, 4, 16, 32, 48, 96, 384, 3072, 9216, 36864, 46080};

TEST(A, ComparisonTableValues) {
    EXPECT_EQ(a(1), BigCount(1));
    EXPECT_EQ(a(5), BigCount(20));
    EXPECT_EQ(a(10), BigCount(7200));
    EXPECT_EQ(a(15), BigCount(21611520));
}

TEST(A, DistanceOnePairsMustBeIgnored) {
    BigCount counted;
    for (std::uint64_t i = 1; i <= 6; ++i) counted += plain_summand(6, i, DistanceOnePairs::kCounted);
    EXPECT_EQ(a(6), BigCount(48));
    EXPECT_EQ(counted, BigCount(84));
}

TEST(A, MirrorSummandsAndEvenness) {
    for (std::uint64_t n = 1; n <= 64; ++n) {
        for (std::uint64_t i = 1; i <= n; ++i) {
            ASSERT_EQ(plain_summand(n, i), plain_summand(n, n + 1 - i)) << n << "," << i;
        }
        if (n >= 2) ASSERT_TRUE(a(n).is_even()) << n;
    }
}

TEST(A, SummandRejectsBadIndex) {
    EXPECT_THROW(plain_summand(5, 0), std::out_of_range);
    EXPECT_THROW(plain_summand(5, 6), std::out_of_range);
}

TEST(A166079, Examples) {
    EXPECT_EQ(a166079(1), BigCount(1));
    EXPECT_EQ(a166079(4), BigCount(2));
    EXPECT_EQ(a166079(7), BigCount(3));
}

TEST(A095236, Golden) {
    for (std::uint64_t n = 1; n <= kA095236.size(); ++n) {
        EXPECT_EQ(a095236(n), BigCount(kA095236[n - 1])) << n;
    }
}

TEST(A095240, GoldenAndDomain) {
    for (std::uint64_t n = 2; n < kA095240.size() + 2; ++n) {
        EXPECT_EQ(a095240(n), BigCount(kA095240[n - 2])) << n;
    }
    EXPECT_THROW(a095240(1), std::domain_error);
}

TEST(A095240, IsTheEndStartShareOfA095236) {
    for (std::uint32_t n = 2; n <= 14; ++n) {
        EXPECT_EQ(a095240(n), count_sequences_first_at(n, 1, kLongestRunRule) +
                                  count_sequences_first_at(n, n, kLongestRunRule))
            << n;
    }
}

TEST(A095912, Golden) {
    for (std::uint64_t n = 1; n <= kA095912.size(); ++n) {
        EXPECT_EQ(a095912(n), BigCount(kA095912[n - 1])) << n;
    }
    EXPECT_EQ(a095912(2), a095236(2));
}

TEST(AExtended, Golden) {
    for (std::uint64_t n = 1; n <= kAExt.size(); ++n) {
        EXPECT_EQ(a_extended(n), BigCount(kAExt[n - 1])) << n;
    }
    EXPECT_EQ(a_extended(3), a(3));
}

TEST(Counting, FiltersOnlyRestrict) {
    for (std::uint64_t n = 1; n <= 14; ++n) {
        EXPECT_LE(a095912(n), a095236(n)) << n;
        EXPECT_LE(a_extended(n), a(n)) << n;
        EXPECT_LE(a095236(n), a(n)) << n;
    }
}

TEST(Counting, RejectsZeroSeats) {
    EXPECT_THROW(a(0), std::domain_error);
    EXPECT_THROW(a095912(0), std::domain_error);
}

TEST(Factorial, ConcurrentUseAgrees) {
    std::vector<std::thread> workers;
    std::vector<BigCount> results(8);
    for (std::size_t t = 0; t < results.size(); ++t) {
        workers.emplace_back([&, t] { results[t] = factorial(200 + 10 * t); });
    }
    for (auto& w : workers) w.join();
    for (std::size_t t = 0; t < results.size(); ++t) {
        BigCount direct(1);
        for (std::uint64_t k = 2; k <= 200 + 10 * t; ++k) direct *= BigCount(k);
        EXPECT_EQ(results[t], direct);
    }
    EXPECT_EQ(factorial(0), BigCount(1));
    EXPECT_EQ(factorial(20), BigCount(2432902008176640000ULL));
}

}  // namespace
}  // namespace polite
