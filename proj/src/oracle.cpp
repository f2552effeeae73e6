#include "polite/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace polite {

std::string RuleVariant::name() const {
    if (longest_run_filter && fewest_neighbors_filter) return "longest-run+fewest-neighbors";
    if (longest_run_filter) return "longest-run";
    if (fewest_neighbors_filter) return "fewest-neighbors";
    return "plain";
}

// ---------------------------------------------------------------------------
// GapState

namespace {

void insert_sorted(std::vector<std::uint32_t>& gaps, std::uint32_t length) {
    if (length == 0) return;
    gaps.insert(std::upper_bound(gaps.begin(), gaps.end(), length), length);
}

}  // namespace

GapState GapState::after_first(std::uint32_t n, std::uint32_t first) {
    if (first < 1 || first > n) {
        throw std::out_of_range("first seat " + std::to_string(first) + " outside 1.." + std::to_string(n));
    }
    return GapState{first - 1, {}, n - first, 1};
}

GapState GapState::from_occupancy(const Occupancy& row) {
    const auto first = std::find(row.begin(), row.end(), true);
    if (first == row.end()) {
        throw std::invalid_argument("GapState needs at least one occupied seat");
    }
    const auto last = std::find(row.rbegin(), row.rend(), true).base() - 1;

    GapState state;
    state.left_end = static_cast<std::uint32_t>(first - row.begin());
    state.right_end = static_cast<std::uint32_t>(row.end() - last - 1);
    std::uint32_t run = 0;
    for (auto it = first; it <= last; ++it) {
        if (*it) {
            ++state.occupied;
            insert_sorted(state.internal, run);
            run = 0;
        } else {
            ++run;
        }
    }
    return state;
}

std::uint32_t GapState::empty_seats() const {
    return left_end + right_end + std::accumulate(internal.begin(), internal.end(), std::uint32_t{0});
}

GapState GapState::mirrored() const {
    GapState m = *this;
    std::swap(m.left_end, m.right_end);
    return m;
}

// ---------------------------------------------------------------------------
// Candidates on the gap abstraction

namespace {

struct Run {
    GapSlot slot;
    std::size_t index;
    std::uint32_t length;

    bool is_end() const { return slot != GapSlot::kInternal; }
    std::uint32_t effective_length() const { return is_end() ? 2 * length - 1 : length; }
    std::uint32_t best_distance() const { return is_end() ? length : (length - 1) / 2 + 1; }
    std::uint32_t best_neighbors() const {
        if (is_end()) return length == 1 ? 1 : 0;
        if (length == 1) return 2;
        return length == 2 ? 1 : 0;
    }
};

template <class T, class Key>
void keep_extreme(std::vector<T>& items, Key key, bool maximum) {
    if (items.empty()) return;
    auto best = key(items.front());
    for (const auto& it : items) {
        const auto v = key(it);
        if (maximum ? v > best : v < best) best = v;
    }
    std::erase_if(items, [&](const T& it) { return key(it) != best; });
}

}  // namespace

std::vector<Candidate> candidates(const GapState& state, const RuleVariant& rule) {
    if (state.occupied == 0) {
        throw std::invalid_argument("candidates: the first move is handled by the counting entry points");
    }
    std::vector<Run> runs;
    if (state.left_end > 0) runs.push_back({GapSlot::kLeftEnd, 0, state.left_end});
    for (std::size_t i = 0; i < state.internal.size(); ++i) {
        runs.push_back({GapSlot::kInternal, i, state.internal[i]});
    }
    if (state.right_end > 0) runs.push_back({GapSlot::kRightEnd, 0, state.right_end});
    if (runs.empty()) {
        throw std::invalid_argument("candidates: no empty seat left");
    }

    if (rule.longest_run_filter) {
        keep_extreme(runs, [](const Run& r) { return r.effective_length(); }, true);
    }
    keep_extreme(runs, [](const Run& r) { return r.best_distance(); }, true);
    if (rule.fewest_neighbors_filter) {
        keep_extreme(runs, [](const Run& r) { return r.best_neighbors(); }, false);
    }

    std::vector<Candidate> out;
    for (const Run& r : runs) {
        auto push = [&](std::uint32_t offset) {
            out.push_back({r.slot, r.index, r.length, offset, r.best_distance(), r.best_neighbors()});
        };
        switch (r.slot) {
            case GapSlot::kLeftEnd: push(0); break;
            case GapSlot::kRightEnd: push(r.length - 1); break;
            case GapSlot::kInternal:
                if (r.length % 2 == 1) {
                    push((r.length - 1) / 2);
                } else {
                    push(r.length / 2 - 1);
                    push(r.length / 2);
                }
                break;
        }
    }
    return out;
}

GapState occupy(const GapState& state, const Candidate& seat) {
    if (seat.offset >= seat.gap_length) {
        throw std::invalid_argument("occupy: offset outside its run");
    }
    GapState next = state;
    ++next.occupied;
    const std::uint32_t before = seat.offset;
    const std::uint32_t after = seat.gap_length - seat.offset - 1;
    switch (seat.slot) {
        case GapSlot::kLeftEnd:
            if (state.left_end != seat.gap_length) throw std::invalid_argument("occupy: stale left end");
            next.left_end = before;
            insert_sorted(next.internal, after);
            break;
        case GapSlot::kRightEnd:
            if (state.right_end != seat.gap_length) throw std::invalid_argument("occupy: stale right end");
            next.right_end = after;
            insert_sorted(next.internal, before);
            break;
        case GapSlot::kInternal:
            if (seat.gap_index >= state.internal.size() || state.internal[seat.gap_index] != seat.gap_length) {
                throw std::invalid_argument("occupy: stale internal gap");
            }
            next.internal.erase(next.internal.begin() + static_cast<std::ptrdiff_t>(seat.gap_index));
            insert_sorted(next.internal, before);
            insert_sorted(next.internal, after);
            break;
    }
    return next;
}

// ---------------------------------------------------------------------------
// Memoized counting

namespace {

struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& key) const noexcept {
        std::size_t h = key.size();
        for (auto v : key) {
            h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

class SequenceCounter {
public:
    SequenceCounter(RuleVariant rule, CountOptions options) : rule_(rule), options_(options) {}

    BigCount count(const GapState& state) {
        if (state.empty_seats() == 0) return BigCount(1);

        auto key = make_key(state);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        // Seats of the same kind and run length lead to the same successor.
        struct Group {
            GapSlot slot;
            std::uint32_t length;
            Candidate first;
            std::uint64_t weight;
        };
        std::vector<Group> groups;
        for (const Candidate& c : candidates(state, rule_)) {
            auto g = std::find_if(groups.begin(), groups.end(),
                                  [&](const Group& x) { return x.slot == c.slot && x.length == c.gap_length; });
            if (g == groups.end()) {
                groups.push_back({c.slot, c.gap_length, c, 1});
            } else {
                ++g->weight;
            }
        }

        BigCount total;
        for (const Group& g : groups) {
            total += BigCount(g.weight) * count(occupy(state, g.first));
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

private:
    std::vector<std::uint32_t> make_key(const GapState& s) const {
        std::uint32_t l = s.left_end;
        std::uint32_t r = s.right_end;
        if (options_.mirror_canonical && r < l) std::swap(l, r);
        std::vector<std::uint32_t> key;
        key.reserve(s.internal.size() + 2);
        key.push_back(l);
        key.push_back(r);
        key.insert(key.end(), s.internal.begin(), s.internal.end());
        return key;
    }

    RuleVariant rule_;
    CountOptions options_;
    std::unordered_map<std::vector<std::uint32_t>, BigCount, KeyHash> memo_;
};

}  // namespace

BigCount count_completions(const GapState& state, const RuleVariant& rule, CountOptions options) {
    SequenceCounter counter(rule, options);
    return counter.count(state);
}

BigCount count_sequences_first_at(std::uint32_t n, std::uint32_t first, const RuleVariant& rule,
                                  CountOptions options) {
    return count_completions(GapState::after_first(n, first), rule, options);
}

BigCount count_sequences(std::uint32_t n, const RuleVariant& rule, CountOptions options) {
    if (n < 1) throw std::invalid_argument("count_sequences needs n >= 1");
    SequenceCounter counter(rule, options);
    BigCount total;
    for (std::uint32_t i = 1; i <= n; ++i) {
        total += counter.count(GapState::after_first(n, i));
    }
    return total;
}

// ---------------------------------------------------------------------------
// Seat-level rule evaluation

std::vector<std::uint32_t> seat_distances(const Occupancy& row) {
    const std::size_t n = row.size();
    constexpr auto kFar = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> dist(n, kFar);
    std::uint32_t since = kFar;
    for (std::size_t x = 0; x < n; ++x) {
        since = row[x] ? 0 : (since == kFar ? kFar : since + 1);
        dist[x] = since;
    }
    since = kFar;
    for (std::size_t x = n; x-- > 0;) {
        since = row[x] ? 0 : (since == kFar ? kFar : since + 1);
        dist[x] = std::min(dist[x], since);
    }
    for (auto& v : dist) {
        if (v == kFar) v = 0;
    }
    return dist;
}

std::vector<std::size_t> seat_candidates(const Occupancy& row, const RuleVariant& rule) {
    const std::size_t n = row.size();
    std::vector<std::size_t> pool;
    for (std::size_t x = 0; x < n; ++x) {
        if (!row[x]) pool.push_back(x);
    }
    if (pool.empty()) {
        throw std::invalid_argument("seat_candidates: row is full");
    }
    if (pool.size() == n) return pool;

    const auto dist = seat_distances(row);

    if (rule.longest_run_filter) {
        // effective run length per empty seat
        std::vector<std::uint32_t> eff(n, 0);
        std::size_t s = 0;
        while (s < n) {
            if (row[s]) { ++s; continue; }
            std::size_t t = s;
            while (t < n && !row[t]) ++t;
            const auto len = static_cast<std::uint32_t>(t - s);
            const bool edge = s == 0 || t == n;
            for (std::size_t x = s; x < t; ++x) eff[x] = edge ? 2 * len - 1 : len;
            s = t;
        }
        keep_extreme(pool, [&](std::size_t x) { return eff[x]; }, true);
    }
    keep_extreme(pool, [&](std::size_t x) { return dist[x]; }, true);
    if (rule.fewest_neighbors_filter) {
        auto neighbors = [&](std::size_t x) {
            return static_cast<int>(x > 0 && row[x - 1]) + static_cast<int>(x + 1 < n && row[x + 1]);
        };
        keep_extreme(pool, neighbors, false);
    }
    return pool;
}

// ---------------------------------------------------------------------------
// Naive enumeration

namespace {

std::uint64_t naive_completions(Occupancy& row, std::size_t remaining, const RuleVariant& rule) {
    if (remaining == 0) return 1;
    std::uint64_t total = 0;
    for (std::size_t x : seat_candidates(row, rule)) {
        row[x] = true;
        total += naive_completions(row, remaining - 1, rule);
        row[x] = false;
    }
    return total;
}

}  // namespace

BigCount count_sequences_naive(std::uint32_t n, const RuleVariant& rule, std::uint32_t cap) {
    // 20! is the largest factorial below 2^64
    if (cap > 20) throw std::invalid_argument("naive enumeration cap must not exceed 20");
    if (n < 1 || n > cap) {
        throw std::invalid_argument("count_sequences_naive: n=" + std::to_string(n) + " outside 1.." +
                                    std::to_string(cap));
    }
    Occupancy row(n, false);
    return BigCount(naive_completions(row, n, rule));
}

// ---------------------------------------------------------------------------
// Censuses

void CensusTable::add(std::uint64_t k, std::uint64_t count) {
    if (count > 0) counts_[k] += count;
}

std::uint64_t CensusTable::operator[](std::uint64_t k) const {
    const auto it = counts_.find(k);
    return it == counts_.end() ? 0 : it->second;
}

std::uint64_t CensusTable::total() const {
    std::uint64_t t = 0;
    for (const auto& [k, c] : counts_) t += c;
    return t;
}

namespace {

using PairKey = std::pair<std::size_t, std::uint32_t>;  // (left seat of pair, distance)

// Adds every adjacent empty pair with equal distances; returns the newly added keys.
std::vector<PairKey> record_pairs(const Occupancy& row, std::set<PairKey>& seen) {
    std::vector<PairKey> added;
    const auto dist = seat_distances(row);
    for (std::size_t x = 0; x + 1 < row.size(); ++x) {
        if (!row[x] && !row[x + 1] && dist[x] == dist[x + 1]) {
            if (seen.insert({x, dist[x]}).second) added.push_back({x, dist[x]});
        }
    }
    return added;
}

CensusTable tally_pairs(const std::set<PairKey>& seen) {
    CensusTable t;
    for (const auto& [x, k] : seen) t.add(k);
    return t;
}

struct Trajectory {
    CensusTable b;
    CensusTable d;
};

Trajectory canonical_trajectory(std::uint32_t p) {
    if (p < 1) throw std::invalid_argument("census needs p >= 1");
    Occupancy row(p, false);
    row[0] = true;
    std::set<PairKey> seen;
    record_pairs(row, seen);

    Trajectory tr;
    for (std::uint32_t person = 2; person <= p; ++person) {
        const std::size_t seat = seat_candidates(row, kPlainRule).front();
        tr.b.add(seat_distances(row)[seat]);
        row[seat] = true;
        record_pairs(row, seen);
    }
    tr.d = tally_pairs(seen);
    return tr;
}

}  // namespace

CensusTable b_census(std::uint32_t p) { return canonical_trajectory(p).b; }

CensusTable d_census(std::uint32_t p) { return canonical_trajectory(p).d; }

bool verify_census_invariance(std::uint32_t p, std::uint32_t cap) {
    if (p < 1 || p > cap) {
        throw std::invalid_argument("verify_census_invariance: p=" + std::to_string(p) + " outside 1.." +
                                    std::to_string(cap));
    }
    const Trajectory expected = canonical_trajectory(p);

    Occupancy row(p, false);
    row[0] = true;
    std::set<PairKey> seen;
    record_pairs(row, seen);
    CensusTable b;

    std::function<bool(std::uint32_t)> explore = [&](std::uint32_t remaining) -> bool {
        if (remaining == 0) {
            return b == expected.b && tally_pairs(seen) == expected.d;
        }
        const auto dist = seat_distances(row);
        for (std::size_t seat : seat_candidates(row, kPlainRule)) {
            const CensusTable saved = b;
            b.add(dist[seat]);
            row[seat] = true;
            const auto added = record_pairs(row, seen);
            const bool ok = explore(remaining - 1);
            for (const auto& key : added) seen.erase(key);
            row[seat] = false;
            b = saved;
            if (!ok) return false;
        }
        return true;
    };
    return explore(p - 1);
}

// ---------------------------------------------------------------------------
// Reachability

bool is_reachable(const Occupancy& target) {
    if (target.empty()) throw std::invalid_argument("is_reachable needs at least one seat");
    const auto goal = static_cast<std::size_t>(std::count(target.begin(), target.end(), true));

    std::unordered_set<Occupancy> dead;
    Occupancy row(target.size(), false);

    std::function<bool(std::size_t)> search = [&](std::size_t taken) -> bool {
        if (taken == goal) return true;
        if (dead.contains(row)) return false;
        for (std::size_t seat : seat_candidates(row, kPlainRule)) {
            if (!target[seat]) continue;
            row[seat] = true;
            const bool ok = search(taken + 1);
            row[seat] = false;
            if (ok) return true;
        }
        dead.insert(row);
        return false;
    };
    return search(0);
}

}  // namespace polite
