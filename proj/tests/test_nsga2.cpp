/*
Copyright 2026 The MetisForge Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "metisforge/search/nsga2.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "metisforge/common/rng.hpp"
#include "metisforge/fitness/objectives.hpp"

namespace metisforge::search {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct MiniInd {
    std::uint64_t id = 0;
    fitness::FitnessPair fitness;
    bool evaluated = true;
    int rank = -1;
    double crowding = 0.0;
};

MiniInd make_ind(std::uint64_t id, double f1, double f2) {
    MiniInd ind;
    ind.id = id;
    ind.fitness.f1 = f1;
    ind.fitness.f2 = f2;
    return ind;
}

std::vector<fitness::FitnessPair> pairs(std::initializer_list<std::pair<double, double>> vs) {
    std::vector<fitness::FitnessPair> out;
    for (const auto& [f1, f2] : vs) {
        fitness::FitnessPair f;
        f.f1 = f1;
        f.f2 = f2;
        out.push_back(f);
    }
    return out;
}

// Reference front assignment by repeated peeling: a point joins the current
// front iff no still-unassigned point dominates it.
std::vector<std::vector<std::size_t>>
peel_fronts(const std::vector<fitness::FitnessPair>& fs) {
    std::vector<std::vector<std::size_t>> fronts;
    std::vector<bool> assigned(fs.size(), false);
    std::size_t remaining = fs.size();
    while (remaining > 0) {
        std::vector<std::size_t> front;
        for (std::size_t i = 0; i < fs.size(); ++i) {
            if (assigned[i]) {
                continue;
            }
            bool dominated = false;
            for (std::size_t j = 0; j < fs.size(); ++j) {
                if (!assigned[j] && j != i && fitness::dominates(fs[j], fs[i])) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) {
                front.push_back(i);
            }
        }
        for (std::size_t i : front) {
            assigned[i] = true;
        }
        remaining -= front.size();
        fronts.push_back(std::move(front));
    }
    return fronts;
}

TEST(FastNondominatedSort, DiagonalPointsShareOneFront) {
    // f1 minimized, f2 maximized: along f1 == f2 no point dominates another.
    const auto fs = pairs({{0, 0}, {1, 1}, {2, 2}, {3, 3}});
    const auto fronts = fast_nondominated_sort(fs);
    ASSERT_EQ(fronts.size(), 1u);
    const std::vector<std::size_t> expected{0, 1, 2, 3};
    EXPECT_EQ(fronts[0], expected);
}

TEST(FastNondominatedSort, StrictChainYieldsSingletonFronts) {
    const auto fs = pairs({{2, 8}, {0, 10}, {1, 9}});
    const auto fronts = fast_nondominated_sort(fs);
    ASSERT_EQ(fronts.size(), 3u);
    EXPECT_EQ(fronts[0], std::vector<std::size_t>{1});
    EXPECT_EQ(fronts[1], std::vector<std::size_t>{2});
    EXPECT_EQ(fronts[2], std::vector<std::size_t>{0});
}

TEST(FastNondominatedSort, DuplicatesAreMutuallyNonDominated) {
    const auto fs = pairs({{1, 1}, {1, 1}, {0, 2}});
    const auto fronts = fast_nondominated_sort(fs);
    ASSERT_EQ(fronts.size(), 2u);
    EXPECT_EQ(fronts[0], std::vector<std::size_t>{2});
    const std::vector<std::size_t> dupes{0, 1};
    EXPECT_EQ(fronts[1], dupes);
}

TEST(FastNondominatedSort, EmptyPopulation) {
    EXPECT_TRUE(fast_nondominated_sort({}).empty());
}

TEST(FastNondominatedSort, MatchesPeelingOracleOnRandomPopulations) {
    // Small value palette forces plenty of ties and duplicates; the infinite
    // sparseness sentinel for f2 joins the mix.
    const double palette1[] = {0.0, 0.25, 0.5, 0.75, 1.0};
    const double palette2[] = {0.0, 0.25, 0.5, 0.75, 1.0, kInf};
    Rng rng(314);
    for (int pop_case = 0; pop_case < 200; ++pop_case) {
        const std::size_t n = 1 + rng.uniform_index(20);
        std::vector<fitness::FitnessPair> fs(n);
        for (fitness::FitnessPair& f : fs) {
            f.f1 = palette1[rng.uniform_index(5)];
            f.f2 = palette2[rng.uniform_index(6)];
        }
        EXPECT_EQ(fast_nondominated_sort(fs), peel_fronts(fs)) << "case " << pop_case;
    }
}

TEST(CrowdingValues, BoundariesInfiniteInteriorSumsNormalizedGaps) {
    const auto fs = pairs({{0, 0}, {1, 1}, {2, 2}});
    const std::vector<std::size_t> front{0, 1, 2};
    const std::vector<double> c = crowding_values(fs, front);
    ASSERT_EQ(c.size(), 3u);
    EXPECT_TRUE(std::isinf(c[0]));
    EXPECT_TRUE(std::isinf(c[2]));
    // Middle point: per objective the neighbour gap is 2 over a range of 2,
    // so each objective contributes 2 / (2 * 2) = 0.5.
    EXPECT_DOUBLE_EQ(c[1], 1.0);
}

TEST(CrowdingValues, IdenticalFitnessesLeaveInteriorAtZero) {
    const auto fs = pairs({{0.5, 0.5}, {0.5, 0.5}, {0.5, 0.5}});
    const std::vector<std::size_t> front{0, 1, 2};
    const std::vector<double> c = crowding_values(fs, front);
    EXPECT_TRUE(std::isinf(c[0]));
    EXPECT_DOUBLE_EQ(c[1], 0.0);
    EXPECT_TRUE(std::isinf(c[2]));
}

TEST(CrowdingValues, InfiniteSparsenessSentinelContributesNothing) {
    // f2 == +inf models individuals measured against an empty archive; the
    // degenerate f2 range must not poison the f1 contribution.
    const auto fs = pairs({{0, kInf}, {1, kInf}, {2, kInf}});
    const std::vector<std::size_t> front{0, 1, 2};
    const std::vector<double> c = crowding_values(fs, front);
    EXPECT_TRUE(std::isinf(c[0]));
    EXPECT_DOUBLE_EQ(c[1], 0.5);
    EXPECT_TRUE(std::isinf(c[2]));
}

TEST(CrowdingValues, EmptyAndSingletonFronts) {
    const auto fs = pairs({{0, 0}});
    EXPECT_TRUE(crowding_values(fs, {}).empty());
    const std::vector<double> single = crowding_values(fs, {0});
    ASSERT_EQ(single.size(), 1u);
    EXPECT_TRUE(std::isinf(single[0]));
}

TEST(AssignRanksAndCrowding, WritesLayeredRanks) {
    std::vector<MiniInd> pop{
        make_ind(0, 2, 8),
        make_ind(1, 0, 10),
        make_ind(2, 1, 9),
    };
    assign_ranks_and_crowding(pop);
    EXPECT_EQ(pop[1].rank, 0);
    EXPECT_EQ(pop[2].rank, 1);
    EXPECT_EQ(pop[0].rank, 2);
    for (const MiniInd& ind : pop) {
        EXPECT_TRUE(std::isinf(ind.crowding)); // singleton fronts
    }
}

TEST(AssignRanksAndCrowding, RejectsUnevaluatedIndividuals) {
    std::vector<MiniInd> pop{make_ind(0, 0, 0)};
    pop[0].evaluated = false;
    EXPECT_THROW(assign_ranks_and_crowding(pop), std::logic_error);
}

TEST(TournamentPick, DeterministicForFixedSeed) {
    std::vector<MiniInd> pop;
    for (int i = 0; i < 8; ++i) {
        pop.push_back(make_ind(static_cast<std::uint64_t>(i), i, 8 - i));
    }
    assign_ranks_and_crowding(pop);
    Rng rng_a(99);
    Rng rng_b(99);
    for (int draw = 0; draw < 50; ++draw) {
        const std::size_t pick_a = tournament_pick(pop, rng_a);
        EXPECT_EQ(pick_a, tournament_pick(pop, rng_b));
        EXPECT_LT(pick_a, pop.size());
    }
}

TEST(TournamentPick, FavoursLowerRank) {
    std::vector<MiniInd> pop{make_ind(0, 0, 1), make_ind(1, 1, 0)};
    assign_ranks_and_crowding(pop);
    ASSERT_EQ(pop[0].rank, 0);
    ASSERT_EQ(pop[1].rank, 1);
    Rng rng(7);
    int wins_for_better = 0;
    for (int draw = 0; draw < 1000; ++draw) {
        if (tournament_pick(pop, rng) == 0) {
            ++wins_for_better;
        }
    }
    // The worse individual only survives when both draws land on it (~1/4).
    EXPECT_GT(wins_for_better, 650);
    EXPECT_LT(wins_for_better, 850);
}

TEST(TournamentPick, FavoursLargerCrowdingWithinARank) {
    std::vector<MiniInd> pop{make_ind(0, 0, 0), make_ind(1, 0, 0)};
    for (MiniInd& ind : pop) {
        ind.rank = 0;
    }
    pop[0].crowding = 5.0;
    pop[1].crowding = 1.0;
    Rng rng(13);
    int wins_for_sparser = 0;
    for (int draw = 0; draw < 1000; ++draw) {
        if (tournament_pick(pop, rng) == 0) {
            ++wins_for_sparser;
        }
    }
    EXPECT_GT(wins_for_sparser, 650);
    EXPECT_LT(wins_for_sparser, 850);
}

TEST(SelTourDcd, ReturnsRequestedNumberOfCopies) {
    std::vector<MiniInd> pop;
    for (int i = 0; i < 5; ++i) {
        pop.push_back(make_ind(static_cast<std::uint64_t>(i), i, 5 - i));
    }
    assign_ranks_and_crowding(pop);
    Rng rng(3);
    const std::vector<MiniInd> offspring = sel_tour_dcd(pop, 12, rng);
    ASSERT_EQ(offspring.size(), 12u);
    for (const MiniInd& child : offspring) {
        EXPECT_LT(child.id, 5u);
    }
}

TEST(EnvironmentalSelect, KeepsWholeFrontsWhenTheyFit) {
    std::vector<MiniInd> merged{
        make_ind(0, 0, 10),
        make_ind(1, 1, 11),
        make_ind(2, 2, 5),
        make_ind(3, 3, 6),
    };
    const std::vector<MiniInd> selected = environmental_select(merged, 4);
    ASSERT_EQ(selected.size(), 4u);
    EXPECT_EQ(selected[0].id, 0u);
    EXPECT_EQ(selected[1].id, 1u);
    EXPECT_EQ(selected[2].id, 2u);
    EXPECT_EQ(selected[3].id, 3u);
    EXPECT_EQ(selected[0].rank, 0);
    EXPECT_EQ(selected[2].rank, 1);
}

TEST(EnvironmentalSelect, TruncatesLastFrontByCrowdingThenId) {
    // One six-point front along the diagonal: boundary points carry infinite
    // crowding; the four interior points tie at 0.4 and fall back to id order.
    std::vector<MiniInd> merged;
    for (int i = 0; i < 6; ++i) {
        merged.push_back(make_ind(static_cast<std::uint64_t>(i), i, i));
    }
    const std::vector<MiniInd> selected = environmental_select(merged, 4);
    ASSERT_EQ(selected.size(), 4u);
    EXPECT_EQ(selected[0].id, 0u);
    EXPECT_EQ(selected[1].id, 5u);
    EXPECT_EQ(selected[2].id, 1u);
    EXPECT_EQ(selected[3].id, 2u);
}

TEST(EnvironmentalSelect, ReassignsStaleRanks) {
    std::vector<MiniInd> merged{
        make_ind(0, 0, 10),
        make_ind(1, 1, 5),
    };
    merged[0].rank = 99;
    merged[1].rank = 99;
    const std::vector<MiniInd> selected = environmental_select(merged, 2);
    EXPECT_EQ(selected[0].rank, 0);
    EXPECT_EQ(selected[1].rank, 1);
}

TEST(EnvironmentalSelect, RejectsUndersizedMerge) {
    std::vector<MiniInd> merged{make_ind(0, 0, 0)};
    EXPECT_THROW(environmental_select(merged, 2), std::logic_error);
}

} // namespace
} // namespace metisforge::search
