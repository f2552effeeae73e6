#include "polite/schema.hpp"

#include <stdexcept>

namespace polite {

std::string SchemaTuple::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i > 0) out += ';';
        out += std::to_string(entries[i]);
    }
    return out;
}

SchemaTuple schema_tuple(std::uint32_t level, std::uint32_t cap) {
    if (level < 1 || level > cap) {
        throw std::invalid_argument("schema level " + std::to_string(level) + " outside 1.." + std::to_string(cap));
    }
    std::vector<std::uint32_t> cur{1, 2};
    for (std::uint32_t l = 1; l < level; ++l) {
        std::vector<std::uint32_t> next;
        next.reserve(cur.size() * 2);
        for (auto s : cur) next.push_back(2 * s - 1);
        for (auto s : cur) next.push_back(2 * s);
        cur = std::move(next);
    }
    return {level, std::move(cur)};
}

Occupancy equal_runs_row(std::uint32_t run_length, std::uint32_t level) {
    if (run_length < 1 || level < 1 || level > 16) {
        throw std::invalid_argument("equal_runs_row needs run_length >= 1 and 1 <= level <= 16");
    }
    const std::uint32_t runs = std::uint32_t{1} << level;
    Occupancy row;
    row.push_back(true);
    for (std::uint32_t r = 0; r < runs; ++r) {
        row.insert(row.end(), run_length, false);
        row.push_back(true);
    }
    return row;
}

namespace {

struct RunSpan {
    std::size_t begin;
    std::size_t length;
};

std::vector<RunSpan> empty_runs(const Occupancy& row) {
    std::vector<RunSpan> runs;
    std::size_t s = 0;
    while (s < row.size()) {
        if (row[s]) { ++s; continue; }
        std::size_t t = s;
        while (t < row.size() && !row[t]) ++t;
        runs.push_back({s, t - s});
        s = t;
    }
    return runs;
}

}  // namespace

std::vector<Occupancy> simulate_insertions(const Occupancy& start, std::uint32_t level, InsertionKind kind) {
    const SchemaTuple order = schema_tuple(level);
    const std::size_t run_count = order.entries.size();

    if (start.empty() || !start.front() || !start.back()) {
        throw std::invalid_argument("simulate_insertions: both end seats must be occupied");
    }
    const auto runs = empty_runs(start);
    if (runs.size() != run_count) {
        throw std::invalid_argument("simulate_insertions: expected " + std::to_string(run_count) + " runs, found " +
                                    std::to_string(runs.size()));
    }
    const std::size_t len = runs.front().length;
    for (const auto& r : runs) {
        if (r.length != len) throw std::invalid_argument("simulate_insertions: runs have unequal lengths");
    }
    for (std::size_t i = 0; i + 1 < runs.size(); ++i) {
        if (runs[i + 1].begin != runs[i].begin + len + 1) {
            throw std::invalid_argument("simulate_insertions: runs must be separated by single occupied seats");
        }
    }
    if (kind == InsertionKind::kOccupiedSeat && len % 2 != 0) {
        throw std::invalid_argument("simulate_insertions: occupied-seat insertion needs an even run length");
    }
    if (!is_reachable(start)) {
        throw std::invalid_argument("simulate_insertions: starting row is not reachable");
    }

    // Runs keep their numbers for the whole round; track where each one starts.
    std::vector<std::size_t> begin(run_count);
    std::vector<std::size_t> width(run_count, len);
    for (std::size_t i = 0; i < run_count; ++i) begin[i] = runs[i].begin;

    Occupancy row = start;
    std::vector<Occupancy> out;
    out.reserve(run_count);
    for (std::uint32_t number : order.entries) {
        const std::size_t idx = number - 1;
        const std::size_t at = begin[idx] + width[idx] / 2;
        row.insert(row.begin() + static_cast<std::ptrdiff_t>(at), kind == InsertionKind::kOccupiedSeat);
        ++width[idx];
        for (std::size_t j = idx + 1; j < run_count; ++j) ++begin[j];
        out.push_back(row);
    }
    return out;
}

std::vector<Occupancy> simulate_insertions(std::uint32_t run_length, std::uint32_t level, InsertionKind kind) {
    return simulate_insertions(equal_runs_row(run_length, level), level, kind);
}

std::string render_row(const Occupancy& row) {
    std::string out;
    for (bool seat : row) out += seat ? "X" : "·";
    return out;
}

}  // namespace polite
