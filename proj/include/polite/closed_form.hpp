#pragma once

#include <cstdint>
#include <optional>

namespace polite {

/// A (seat count, distance) pair with the dyadic band index it falls into.
///
/// For k >= 2 the band index is defined once p >= 1+2k, for k == 1 once p >= 4;
/// below those thresholds `band` is empty and the explicit small cases apply.
struct DistanceQuery {
    std::uint64_t p;
    std::uint64_t k;
    std::optional<std::uint32_t> band;

    /// Validates p, k >= 1 and derives the band index. Throws std::invalid_argument.
    static DistanceQuery make(std::uint64_t p, std::uint64_t k);
};

/// Unique m >= 0 with 2^m * 2k <= p-1 < 2^(m+1) * 2k.
///
/// Pure integer doubling; throws std::invalid_argument unless k >= 2 and p >= 1+2k.
std::uint32_t m_index_general(std::uint64_t p, std::uint64_t k);

/// Unique m >= 0 with 2^m * 3 <= p-1 < 2^(m+1) * 3. Throws unless p >= 4.
std::uint32_t m_index_one(std::uint64_t p);

/// Number of persons who sit at distance exactly k when p persons fill p seats
/// under the plain rule and the first one takes the leftmost seat.
///
/// Total in k: any k >= p lands in the first case and yields 0.
std::uint64_t b(std::uint64_t p, std::uint64_t k);

/// Number of distinct adjacent seat pairs that at some moment both carry
/// distance k during the same leftmost-first process.
std::uint64_t d(std::uint64_t p, std::uint64_t k);

}  // namespace polite
