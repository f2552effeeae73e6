#pragma once

#include <cstdint>

#include "polite/big_count.hpp"

namespace polite {

/// How the pair exponent 2^(d+d) is taken at distance 1.
///
/// Under the plain rule a length-2 run's two seats are already counted by
/// the (b+b)! factor at distance 1, so a(n) must drop the distance-1 pair
/// exponent. The tie-break variants keep the true values everywhere.
enum class DistanceOnePairs {
    kCounted,  // true d(p,1)
    kIgnored,  // d(p,1) treated as 0
};

/// Summand of a(n) for the first person on seat i (1-based):
/// prod_{j=1}^{n-1} 2^(d(i,j)+d(n+1-i,j)) * (b(i,j)+b(n+1-i,j))!.
BigCount plain_summand(std::uint64_t n, std::uint64_t i,
                       DistanceOnePairs pairs = DistanceOnePairs::kIgnored);

/// Summand used by the longest-run formulas: every pair set is served before the
/// remaining seats of the same distance.
BigCount longest_run_summand(std::uint64_t n, std::uint64_t i);

/// Number of seating sequences of n persons on n seats under the plain rule.
BigCount a(std::uint64_t n);

/// A166079(n) = n - b(n,1).
BigCount a166079(std::uint64_t n);

/// A095236: plain rule restricted to the longest empty runs.
BigCount a095236(std::uint64_t n);

/// A095240: the end-start share of A095236. Defined for n >= 2 only;
/// throws std::domain_error for n < 2.
BigCount a095240(std::uint64_t n);

/// A095912: longest-run rule plus fewest occupied neighbours.
BigCount a095912(std::uint64_t n);

/// A_n: plain rule plus fewest occupied neighbours.
BigCount a_extended(std::uint64_t n);

}  // namespace polite
