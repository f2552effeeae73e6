#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "polite/big_count.hpp"

namespace polite {

/// Which tie-break filters sit on top of the maximal-distance rule.
struct RuleVariant {
    /// Keep only seats in the longest empty runs. An end run of length L
    /// competes as if it were an internal run of length 2L-1, the run whose
    /// centre has the same distance.
    bool longest_run_filter = false;
    /// Among the remaining seats keep those with the fewest occupied neighbours.
    bool fewest_neighbors_filter = false;

    friend bool operator==(const RuleVariant&, const RuleVariant&) = default;

    std::string name() const;
};

inline constexpr RuleVariant kPlainRule{false, false};
inline constexpr RuleVariant kLongestRunRule{true, false};
inline constexpr RuleVariant kFewestNeighborsRule{false, true};
inline constexpr RuleVariant kLongestRunFewestNeighborsRule{true, true};

inline constexpr RuleVariant kAllRules[] = {kPlainRule, kLongestRunRule, kFewestNeighborsRule,
                                            kLongestRunFewestNeighborsRule};

/// Seat occupancy of a row, index 0 is the leftmost seat.
using Occupancy = std::vector<bool>;

/// A partially occupied row reduced to what the counting depends on.
///
/// Invariant: left_end + right_end + sum(internal) + occupied == seat count,
/// `internal` is sorted ascending with every entry >= 1, occupied >= 1.
struct GapState {
    std::uint32_t left_end = 0;
    std::vector<std::uint32_t> internal;
    std::uint32_t right_end = 0;
    std::uint32_t occupied = 0;

    /// Row of n seats with only seat `first` (1-based) taken.
    static GapState after_first(std::uint32_t n, std::uint32_t first);

    /// Abstraction of an explicit row; throws if no seat is occupied.
    static GapState from_occupancy(const Occupancy& row);

    std::uint32_t empty_seats() const;
    std::uint32_t seat_count() const { return empty_seats() + occupied; }

    /// Same row read right to left.
    GapState mirrored() const;

    friend bool operator==(const GapState&, const GapState&) = default;
    friend auto operator<=>(const GapState&, const GapState&) = default;
};

enum class GapSlot { kLeftEnd, kInternal, kRightEnd };

/// One seat a rule-obeying person may take.
struct Candidate {
    GapSlot slot;
    std::size_t gap_index;  // position in GapState::internal, 0 for end gaps
    std::uint32_t gap_length;
    std::uint32_t offset;  // 0-based seat position inside the run, left to right
    std::uint32_t distance;
    std::uint32_t occupied_neighbors;

    friend bool operator==(const Candidate&, const Candidate&) = default;
};

/// Seats allowed by `rule` in `state`: longest-run filter (if set), then maximal
/// distance, then fewest occupied neighbours (if set).
/// Throws std::invalid_argument if the state has no empty or no occupied seat.
std::vector<Candidate> candidates(const GapState& state, const RuleVariant& rule);

/// Successor state after taking `seat`.
GapState occupy(const GapState& state, const Candidate& seat);

/// Allowed seats (0-based) of an explicit row, computed seat by seat without the
/// gap abstraction. An empty row allows every seat. Throws on a full row.
std::vector<std::size_t> seat_candidates(const Occupancy& row, const RuleVariant& rule);

/// Distance of every seat to its nearest occupied seat; 0 for occupied seats.
/// All entries are 0 when nothing is occupied.
std::vector<std::uint32_t> seat_distances(const Occupancy& row);

struct CountOptions {
    /// Key the memo on the end-gap pair in canonical order.
    bool mirror_canonical = true;
};

/// Number of distinct complete seating sequences of n persons on n seats.
BigCount count_sequences(std::uint32_t n, const RuleVariant& rule, CountOptions options = {});

/// Same count restricted to sequences whose first person takes seat `first` (1-based).
BigCount count_sequences_first_at(std::uint32_t n, std::uint32_t first, const RuleVariant& rule,
                                  CountOptions options = {});

/// Number of complete sequences continuing from `state`.
BigCount count_completions(const GapState& state, const RuleVariant& rule, CountOptions options = {});

inline constexpr std::uint32_t kNaiveSeatCap = 11;

/// Plain depth-first enumeration over explicit rows, no memo.
/// Throws std::invalid_argument for n > cap.
BigCount count_sequences_naive(std::uint32_t n, const RuleVariant& rule, std::uint32_t cap = kNaiveSeatCap);

/// Distance k -> count. Absent keys read as zero.
class CensusTable {
public:
    void add(std::uint64_t k, std::uint64_t count = 1);
    std::uint64_t operator[](std::uint64_t k) const;
    std::uint64_t total() const;
    const std::map<std::uint64_t, std::uint64_t>& entries() const { return counts_; }

    friend bool operator==(const CensusTable&, const CensusTable&) = default;

private:
    std::map<std::uint64_t, std::uint64_t> counts_;
};

/// Distances at seating time of persons 2..p on the canonical trajectory
/// (first person leftmost, plain rule, leftmost allowed seat each step).
CensusTable b_census(std::uint32_t p);

/// Distinct (adjacent empty pair, k) occurrences on the canonical trajectory,
/// tallied per k.
CensusTable d_census(std::uint32_t p);

inline constexpr std::uint32_t kInvarianceSeatCap = 14;

/// True iff every plain-rule trajectory with the first person leftmost yields
/// the canonical b and d censuses. Throws for p > cap.
bool verify_census_invariance(std::uint32_t p, std::uint32_t cap = kInvarianceSeatCap);

/// True iff the occupied seats of `target` can be taken, in some order, as a
/// legal prefix of the plain process.
bool is_reachable(const Occupancy& target);

}  // namespace polite
