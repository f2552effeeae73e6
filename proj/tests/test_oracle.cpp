#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>

#include "polite/counting.hpp"
#include "polite/oracle.hpp"

namespace polite {
namespace {

Occupancy row_of(const std::string& pattern) {
    Occupancy row;
    for (char c : pattern) row.push_back(c == 'X');
    return row;
}

TEST(GapState, FromOccupancy) {
    const auto s = GapState::from_occupancy(row_of("OXOOXOOOOXO"));
    EXPECT_EQ(s.left_end, 1u);
    EXPECT_EQ(s.right_end, 1u);
    EXPECT_EQ(s.internal, (std::vector<std::uint32_t>{2, 4}));
    EXPECT_EQ(s.occupied, 3u);
    EXPECT_EQ(s.seat_count(), 11u);
    EXPECT_THROW(GapState::from_occupancy(row_of("OOO")), std::invalid_argument);
}

TEST(Candidates, EvenInternalGapHasTwoCentres) {
    const auto c = candidates(GapState::from_occupancy(row_of("XOOOOX")), kPlainRule);
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(c[0].distance, 2u);
    EXPECT_EQ(c[1].distance, 2u);
    EXPECT_EQ(c[0].offset, 1u);
    EXPECT_EQ(c[1].offset, 2u);
}

TEST(Candidates, LongestRunAndFewestNeighbours) {
    // O X O O: only seat 4 survives.
    const auto c = candidates(GapState::from_occupancy(row_of("OXOO")), kLongestRunFewestNeighborsRule);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0].slot, GapSlot::kRightEnd);
    EXPECT_EQ(c[0].distance, 2u);
}

TEST(Candidates, FewestNeighboursPrefersEdgeSeat) {
    const auto plain = candidates(GapState::from_occupancy(row_of("OXOX")), kPlainRule);
    EXPECT_EQ(plain.size(), 2u);
    const auto c = candidates(GapState::from_occupancy(row_of("OXOX")), kFewestNeighborsRule);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c[0].slot, GapSlot::kLeftEnd);
    EXPECT_EQ(c[0].occupied_neighbors, 1u);
    EXPECT_EQ(seat_candidates(row_of("OXOX"), kFewestNeighborsRule), (std::vector<std::size_t>{0}));
}

TEST(Candidates, EndRunCompetesWithItsMirrorRun) {
    // End run of 2 and internal run of 3 both offer distance 2 and stay together.
    const auto row = row_of("OOXOOOX");
    EXPECT_EQ(seat_candidates(row, kLongestRunRule), (std::vector<std::size_t>{0, 4}));
    EXPECT_EQ(candidates(GapState::from_occupancy(row), kLongestRunRule).size(), 2u);
    // An internal run of 4 also offers distance 2 and beats both.
    EXPECT_EQ(seat_candidates(row_of("OOXOOOOX"), kLongestRunRule), (std::vector<std::size_t>{4, 5}));
}

TEST(Candidates, NeighbourCounts) {
    const auto c = candidates(GapState::from_occupancy(row_of("XOXOOXO")), kPlainRule);
    ASSERT_EQ(c.size(), 4u);
    for (const auto& x : c) {
        EXPECT_EQ(x.distance, 1u);
        if (x.slot == GapSlot::kInternal && x.gap_length == 1) EXPECT_EQ(x.occupied_neighbors, 2u);
        if (x.slot == GapSlot::kInternal && x.gap_length == 2) EXPECT_EQ(x.occupied_neighbors, 1u);
        if (x.slot == GapSlot::kRightEnd) EXPECT_EQ(x.occupied_neighbors, 1u);
    }
}

TEST(Candidates, RejectFullOrEmptyRows) {
    EXPECT_THROW(candidates(GapState::from_occupancy(row_of("XXX")), kPlainRule), std::invalid_argument);
    EXPECT_THROW(candidates(GapState{3, {}, 0, 0}, kPlainRule), std::invalid_argument);
    EXPECT_THROW(seat_candidates(row_of("XX"), kPlainRule), std::invalid_argument);
}

// Gap-level candidates must name exactly the seats the seat-level rule allows.
TEST(Candidates, AgreeWithSeatLevelRuleOnRandomRows) {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 4000; ++trial) {
        const std::size_t n = 1 + rng() % 24;
        Occupancy row(n);
        for (std::size_t x = 0; x < n; ++x) row[x] = rng() % 3 == 0;
        if (std::none_of(row.begin(), row.end(), [](bool v) { return v; })) row[rng() % n] = true;
        if (std::all_of(row.begin(), row.end(), [](bool v) { return v; })) continue;

        const GapState state = GapState::from_occupancy(row);
        for (const auto& rule : kAllRules) {
            const auto seats = seat_candidates(row, rule);
            const auto gaps = candidates(state, rule);
            ASSERT_EQ(seats.size(), gaps.size()) << trial << " " << rule.name();
            const auto dist = seat_distances(row);
            for (std::size_t s : seats) ASSERT_EQ(dist[s], gaps.front().distance);
        }
    }
}

TEST(Candidates, ReachableStatesHaveOneDistance) {
    for (std::uint32_t n = 1; n <= 14; ++n) {
        std::set<GapState> seen;
        std::vector<GapState> todo;
        for (std::uint32_t i = 1; i <= n; ++i) todo.push_back(GapState::after_first(n, i));
        while (!todo.empty()) {
            GapState s = todo.back();
            todo.pop_back();
            if (!seen.insert(s).second || s.empty_seats() == 0) continue;
            const auto c = candidates(s, kPlainRule);
            ASSERT_FALSE(c.empty());
            for (const auto& x : c) {
                ASSERT_EQ(x.distance, c.front().distance);
                todo.push_back(occupy(s, x));
            }
        }
    }
}

TEST(Occupy, EndGapBecomesInternal) {
    const auto s = GapState::after_first(8, 1);
    const auto c = candidates(s, kPlainRule);
    ASSERT_EQ(c.size(), 1u);
    const auto next = occupy(s, c.front());
    EXPECT_EQ(next, (GapState{0, {6}, 0, 2}));
}

TEST(CountSequences, Examples) {
    EXPECT_EQ(count_sequences(3, kPlainRule), BigCount(4));
    EXPECT_EQ(count_sequences(15, kPlainRule), BigCount(21611520));
    EXPECT_EQ(count_sequences(4, kFewestNeighborsRule), BigCount(6));
}

TEST(CountSequences, NaiveExamples) {
    EXPECT_EQ(count_sequences_naive(2, kPlainRule), BigCount(2));
    for (const auto& rule : kAllRules) EXPECT_EQ(count_sequences_naive(1, rule), BigCount(1));
    EXPECT_EQ(count_sequences_naive(8, kPlainRule), BigCount(576));
    EXPECT_THROW(count_sequences_naive(12, kPlainRule), std::invalid_argument);
    EXPECT_THROW(count_sequences_naive(5, kPlainRule, 21), std::invalid_argument);
}

TEST(CountSequences, MemoMatchesNaive) {
    for (std::uint32_t n = 1; n <= 11; ++n) {
        for (const auto& rule : kAllRules) {
            ASSERT_EQ(count_sequences(n, rule), count_sequences_naive(n, rule)) << n << " " << rule.name();
        }
    }
}

TEST(CountSequences, MatchesClosedForms) {
    for (std::uint32_t n = 1; n <= 18; ++n) {
        ASSERT_EQ(count_sequences(n, kPlainRule), a(n)) << n;
    }
    for (std::uint32_t n = 1; n <= 14; ++n) {
        ASSERT_EQ(count_sequences(n, kLongestRunRule), a095236(n)) << n;
        ASSERT_EQ(count_sequences(n, kLongestRunFewestNeighborsRule), a095912(n)) << n;
        ASSERT_EQ(count_sequences(n, kFewestNeighborsRule), a_extended(n)) << n;
    }
}

TEST(CountSequences, MirrorCanonicalisationIsTransparent) {
    for (std::uint32_t n = 1; n <= 14; ++n) {
        for (const auto& rule : kAllRules) {
            ASSERT_EQ(count_sequences(n, rule, {.mirror_canonical = true}),
                      count_sequences(n, rule, {.mirror_canonical = false}))
                << n << " " << rule.name();
        }
    }
}

TEST(CountSequences, MirroredStateHasSameCount) {
    const GapState s{3, {1, 4, 5}, 7, 4};
    for (const auto& rule : kAllRules) {
        EXPECT_EQ(count_completions(s, rule, {.mirror_canonical = false}),
                  count_completions(s.mirrored(), rule, {.mirror_canonical = false}));
    }
}

TEST(CountSequencesFirstAt, Examples) {
    EXPECT_EQ(count_sequences_first_at(4, 1, kPlainRule), BigCount(2));
    EXPECT_EQ(count_sequences_first_at(4, 2, kPlainRule), BigCount(2));
    EXPECT_THROW(count_sequences_first_at(4, 0, kPlainRule), std::out_of_range);
    EXPECT_THROW(count_sequences_first_at(4, 5, kPlainRule), std::out_of_range);
}

TEST(CountSequencesFirstAt, MirrorAndSum) {
    for (std::uint32_t n = 1; n <= 13; ++n) {
        for (const auto& rule : kAllRules) {
            BigCount sum;
            for (std::uint32_t i = 1; i <= n; ++i) {
                const auto v = count_sequences_first_at(n, i, rule);
                ASSERT_EQ(v, count_sequences_first_at(n, n + 1 - i, rule));
                sum += v;
            }
            ASSERT_EQ(sum, count_sequences(n, rule));
        }
    }
}

TEST(CountSequencesFirstAt, MatchesPlainSummands) {
    for (std::uint32_t n = 1; n <= 16; ++n) {
        for (std::uint32_t i = 1; i <= n; ++i) {
            ASSERT_EQ(count_sequences_first_at(n, i, kPlainRule), plain_summand(n, i)) << n << "," << i;
        }
    }
}

TEST(Census, BExamples) {
    EXPECT_EQ(b_census(2).entries(), (std::map<std::uint64_t, std::uint64_t>{{1, 1}}));
    EXPECT_EQ(b_census(5).entries(), (std::map<std::uint64_t, std::uint64_t>{{4, 1}, {2, 1}, {1, 2}}));
    EXPECT_TRUE(b_census(1).entries().empty());
}

TEST(Census, DExamples) {
    EXPECT_EQ(d_census(4).entries(), (std::map<std::uint64_t, std::uint64_t>{{1, 1}}));
    EXPECT_EQ(d_census(6).entries(), (std::map<std::uint64_t, std::uint64_t>{{2, 1}, {1, 1}}));
    EXPECT_TRUE(d_census(3).entries().empty());
}

TEST(Census, BCountsEveryLaterPerson) {
    for (std::uint32_t p = 1; p <= 64; ++p) EXPECT_EQ(b_census(p).total(), p - 1);
}

TEST(Census, InvariantAcrossTrajectories) {
    EXPECT_TRUE(verify_census_invariance(1));
    EXPECT_TRUE(verify_census_invariance(6));
    EXPECT_TRUE(verify_census_invariance(12));
    EXPECT_THROW(verify_census_invariance(15), std::invalid_argument);
}

TEST(Reachable, Examples) {
    EXPECT_TRUE(is_reachable(row_of("XOXOX")));
    EXPECT_FALSE(is_reachable(row_of("XXOOO")));
    for (std::size_t x = 0; x < 7; ++x) {
        Occupancy row(7, false);
        row[x] = true;
        EXPECT_TRUE(is_reachable(row));
    }
    EXPECT_TRUE(is_reachable(row_of("OOOO")));
}

TEST(Reachable, AgreesWithForwardEnumeration) {
    // Every row reached by the process is reachable; nothing else is.
    for (std::uint32_t n = 1; n <= 9; ++n) {
        std::set<Occupancy> forward;
        std::vector<Occupancy> todo{Occupancy(n, false)};
        while (!todo.empty()) {
            Occupancy row = todo.back();
            todo.pop_back();
            if (!forward.insert(row).second) continue;
            if (std::all_of(row.begin(), row.end(), [](bool v) { return v; })) continue;
            for (std::size_t s : seat_candidates(row, kPlainRule)) {
                Occupancy next = row;
                next[s] = true;
                todo.push_back(next);
            }
        }
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            Occupancy row(n);
            for (std::uint32_t x = 0; x < n; ++x) row[x] = (mask >> x) & 1u;
            ASSERT_EQ(is_reachable(row), forward.count(row) == 1) << n << " mask " << mask;
        }
    }
}

}  // namespace
}  // namespace polite
