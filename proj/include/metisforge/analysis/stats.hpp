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

#ifndef METISFORGE_ANALYSIS_STATS_HPP
#define METISFORGE_ANALYSIS_STATS_HPP

#include <vector>

namespace metisforge::stats {

/// Statistical kill verdict for one original-vs-mutant comparison.
/// killed holds exactly when p_value < 0.05 and effect_size >= 0.5.
struct KillOutcome {
    double p_value = 1.0;
    double effect_size = 0.0;
    bool killed = false;
    std::vector<double> original_samples;
    std::vector<double> mutant_samples;
};

/// Two-sided Mann-Whitney rank-sum p-value (normal approximation with tie
/// and continuity correction). Degenerate all-tied input yields 1.0.
/// Requires at least 3 samples per side.
double rank_sum_p(const std::vector<double>& a, const std::vector<double>& b);

/// Two-sided Wilcoxon signed-rank p-value for paired samples (instance k
/// paired with instance k). Requires equal sizes of at least 3.
double signed_rank_p(const std::vector<double>& a, const std::vector<double>& b);

/// |mean(a) - mean(b)| / pooled sample standard deviation (df-weighted).
/// Identical constants give 0; zero pooled spread with unequal means gives
/// +infinity. Requires at least 2 samples per side.
double cohens_d(const std::vector<double>& a, const std::vector<double>& b);

enum class RankTest { unpaired, paired };

/// Kill verdict from the two metric lists. Direction-agnostic.
KillOutcome is_killed(const std::vector<double>& orig_metrics,
                      const std::vector<double>& mut_metrics,
                      RankTest test = RankTest::unpaired);

inline constexpr double kKillPValueCutoff = 0.05;
inline constexpr double kKillEffectSizeCutoff = 0.5;

} // namespace metisforge::stats

#endif
