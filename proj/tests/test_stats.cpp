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

#include "metisforge/analysis/stats.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

namespace metisforge::stats {
namespace {

std::vector<double> iota_values(int from, int to) {
    std::vector<double> v;
    for (int i = from; i <= to; ++i) {
        v.push_back(static_cast<double>(i));
    }
    return v;
}

// Expected values below are frozen from an independently written reference
// implementation of the same tests (midrank handling, tie-corrected normal
// approximation with continuity correction).
TEST(RankSumP, SeparatedGroupsFrozenValue) {
    const double p = rank_sum_p(iota_values(1, 10), iota_values(11, 20));
    EXPECT_NEAR(p, 0.0001826717911095504, 1e-12);
}

TEST(RankSumP, TiedGroupsFrozenValue) {
    const std::vector<double> a{1, 2, 2, 3, 5, 5};
    const std::vector<double> b{2, 3, 3, 4, 5, 6};
    EXPECT_NEAR(rank_sum_p(a, b), 0.36823537072839196, 1e-12);
}

TEST(RankSumP, QualityMetricSamplesFrozenValue) {
    const std::vector<double> a{0.9, 0.8, 0.95, 0.85, 0.9, 0.88};
    const std::vector<double> b{0.7, 0.75, 0.8, 0.72, 0.68, 0.74};
    EXPECT_NEAR(rank_sum_p(a, b), 0.0062999510770563212, 1e-12);
}

TEST(RankSumP, OverlappingGroupsFrozenValue) {
    const std::vector<double> a{0.8, 0.82, 0.84, 0.86, 0.88, 0.9};
    const std::vector<double> b{0.79, 0.83, 0.85, 0.85, 0.89, 0.91};
    EXPECT_NEAR(rank_sum_p(a, b), 0.93607467706661984, 1e-12);
}

TEST(RankSumP, AllTiedGivesOne) {
    const std::vector<double> same(6, 0.5);
    EXPECT_DOUBLE_EQ(rank_sum_p(same, same), 1.0);
}

TEST(RankSumP, SymmetricInGroupOrder) {
    const std::vector<double> a{0.1, 0.4, 0.35, 0.8};
    const std::vector<double> b{0.2, 0.3, 0.9, 0.7, 0.5};
    EXPECT_NEAR(rank_sum_p(a, b), rank_sum_p(b, a), 1e-15);
}

TEST(RankSumP, RejectsTinyGroups) {
    const std::vector<double> two{1.0, 2.0};
    const std::vector<double> five{1, 2, 3, 4, 5};
    EXPECT_THROW(rank_sum_p(two, five), std::invalid_argument);
    EXPECT_THROW(rank_sum_p(five, two), std::invalid_argument);
}

TEST(SignedRankP, PairedQualitySamplesFrozenValue) {
    const std::vector<double> a{0.9, 0.8, 0.95, 0.85, 0.9, 0.88};
    const std::vector<double> b{0.7, 0.75, 0.8, 0.72, 0.68, 0.74};
    EXPECT_NEAR(signed_rank_p(a, b), 0.036031686218233577, 1e-12);
}

TEST(SignedRankP, IdenticalPairsGiveOne) {
    const std::vector<double> a{0.2, 0.4, 0.6, 0.8};
    EXPECT_DOUBLE_EQ(signed_rank_p(a, a), 1.0);
}

TEST(SignedRankP, RejectsMismatchedOrTinyInput) {
    const std::vector<double> three{1, 2, 3};
    const std::vector<double> four{1, 2, 3, 4};
    EXPECT_THROW(signed_rank_p(three, four), std::invalid_argument);
    const std::vector<double> two{1, 2};
    EXPECT_THROW(signed_rank_p(two, two), std::invalid_argument);
}

TEST(CohensD, SeparatedGroupsFrozenValue) {
    const double d = cohens_d(iota_values(1, 10), iota_values(11, 20));
    EXPECT_NEAR(d, 3.3028912953790819, 1e-12);
}

TEST(CohensD, TiedGroupsFrozenValue) {
    const std::vector<double> a{1, 2, 2, 3, 5, 5};
    const std::vector<double> b{2, 3, 3, 4, 5, 6};
    EXPECT_NEAR(cohens_d(a, b), 0.5288119308086271, 1e-12);
}

TEST(CohensD, QualityMetricSamplesFrozenValue) {
    const std::vector<double> a{0.9, 0.8, 0.95, 0.85, 0.9, 0.88};
    const std::vector<double> b{0.7, 0.75, 0.8, 0.72, 0.68, 0.74};
    EXPECT_NEAR(cohens_d(a, b), 3.1708961479864124, 1e-12);
}

TEST(CohensD, OverlappingGroupsFrozenValue) {
    const std::vector<double> a{0.8, 0.82, 0.84, 0.86, 0.88, 0.9};
    const std::vector<double> b{0.79, 0.83, 0.85, 0.85, 0.89, 0.91};
    EXPECT_NEAR(cohens_d(a, b), 0.08298826628866067, 1e-12);
}

TEST(CohensD, IdenticalConstantsGiveZero) {
    const std::vector<double> same(4, 0.9);
    EXPECT_DOUBLE_EQ(cohens_d(same, same), 0.0);
}

TEST(CohensD, ZeroSpreadUnequalMeansGivesInfinity) {
    const std::vector<double> a(4, 1.0);
    const std::vector<double> b(4, 0.5);
    EXPECT_TRUE(std::isinf(cohens_d(a, b)));
}

TEST(CohensD, RejectsSingletons) {
    const std::vector<double> one{1.0};
    const std::vector<double> three{1, 2, 3};
    EXPECT_THROW(cohens_d(one, three), std::invalid_argument);
}

TEST(IsKilled, SignificantLargeEffectKills) {
    const std::vector<double> orig{0.9, 0.8, 0.95, 0.85, 0.9, 0.88};
    const std::vector<double> mut{0.7, 0.75, 0.8, 0.72, 0.68, 0.74};
    const KillOutcome out = is_killed(orig, mut);
    EXPECT_TRUE(out.killed);
    EXPECT_LT(out.p_value, kKillPValueCutoff);
    EXPECT_GE(out.effect_size, kKillEffectSizeCutoff);
    EXPECT_EQ(out.original_samples, orig);
    EXPECT_EQ(out.mutant_samples, mut);
}

TEST(IsKilled, OverlappingGroupsSurvive) {
    const std::vector<double> orig{0.8, 0.82, 0.84, 0.86, 0.88, 0.9};
    const std::vector<double> mut{0.79, 0.83, 0.85, 0.85, 0.89, 0.91};
    const KillOutcome out = is_killed(orig, mut);
    EXPECT_FALSE(out.killed);
    EXPECT_GE(out.p_value, kKillPValueCutoff);
}

TEST(IsKilled, DirectionAgnostic) {
    const std::vector<double> lo{0.1, 0.12, 0.11, 0.13, 0.1, 0.12};
    const std::vector<double> hi{0.9, 0.92, 0.91, 0.93, 0.9, 0.92};
    EXPECT_TRUE(is_killed(lo, hi).killed);
    EXPECT_TRUE(is_killed(hi, lo).killed);
}

TEST(IsKilled, PairedModeUsesSignedRankTest) {
    const std::vector<double> orig{0.9, 0.8, 0.95, 0.85, 0.9, 0.88};
    const std::vector<double> mut{0.7, 0.75, 0.8, 0.72, 0.68, 0.74};
    const KillOutcome out = is_killed(orig, mut, RankTest::paired);
    EXPECT_NEAR(out.p_value, 0.036031686218233577, 1e-12);
    EXPECT_TRUE(out.killed);
}

TEST(IsKilled, AllTiedSurvivesWithDegenerateDefaults) {
    const std::vector<double> same(6, 0.75);
    const KillOutcome out = is_killed(same, same);
    EXPECT_FALSE(out.killed);
    EXPECT_DOUBLE_EQ(out.p_value, 1.0);
    EXPECT_DOUBLE_EQ(out.effect_size, 0.0);
}

} // namespace
} // namespace metisforge::stats
