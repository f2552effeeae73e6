#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polite/oracle.hpp"

namespace polite {

/// Round-robin insertion order over 2^level runs (1-based run numbers).
struct SchemaTuple {
    std::uint32_t level;
    std::vector<std::uint32_t> entries;

    /// "1;3;2;4"
    std::string to_string() const;
};

inline constexpr std::uint32_t kSchemaLevelCap = 24;

/// Builds the tuple for 2^level runs by doubling from (1, 2):
/// the first half is 2s-1, the second half 2s, for each entry s of the previous level.
/// Throws std::invalid_argument unless 1 <= level <= cap.
SchemaTuple schema_tuple(std::uint32_t level, std::uint32_t cap = kSchemaLevelCap);

enum class InsertionKind {
    kEmptySeat,     // lengthen a run by one empty seat
    kOccupiedSeat,  // split an even run with an occupied seat in its middle
};

/// Leftmost-first row of 2^level runs, each `run_length` long:
/// X (O^l X)^(2^level).
Occupancy equal_runs_row(std::uint32_t run_length, std::uint32_t level);

/// Applies one full round of insertions to `start` in schema order and returns every
/// intermediate row (one per insertion, the last one is the completed round).
///
/// `start` must be reachable, start with an occupied leftmost seat and consist of
/// 2^level equal runs separated by single occupied seats; occupied-seat insertion
/// additionally needs an even run length. Throws std::invalid_argument otherwise.
std::vector<Occupancy> simulate_insertions(const Occupancy& start, std::uint32_t level, InsertionKind kind);

/// Same, starting from equal_runs_row(run_length, level).
std::vector<Occupancy> simulate_insertions(std::uint32_t run_length, std::uint32_t level, InsertionKind kind);

/// "X··X·X" rendering used in diagnostics.
std::string render_row(const Occupancy& row);

}  // namespace polite
