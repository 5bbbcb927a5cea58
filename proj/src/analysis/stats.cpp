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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace metisforge::stats {

namespace {

// Midranks of the pooled sample plus the tie-group sizes.
struct RankInfo {
    std::vector<double> ranks; // aligned with the sorted order
    std::vector<std::size_t> order;
    double tie_term = 0.0; // sum of t^3 - t over tie groups
};

RankInfo midranks(const std::vector<double>& pooled) {
    RankInfo info;
    const std::size_t n = pooled.size();
    info.order.resize(n);
    std::iota(info.order.begin(), info.order.end(), std::size_t{0});
    std::sort(info.order.begin(), info.order.end(),
              [&](std::size_t i, std::size_t j) { return pooled[i] < pooled[j]; });
    info.ranks.resize(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && pooled[info.order[j + 1]] == pooled[info.order[i]]) {
            ++j;
        }
        const double avg_rank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        for (std::size_t k = i; k <= j; ++k) {
            info.ranks[info.order[k]] = avg_rank;
        }
        const double t = static_cast<double>(j - i + 1);
        info.tie_term += t * t * t - t;
        i = j + 1;
    }
    return info;
}

double two_sided_p_from_z(double z) {
    if (z < 0.0) {
        z = 0.0;
    }
    const double p = std::erfc(z / std::sqrt(2.0));
    return std::clamp(p, 0.0, 1.0);
}

double sample_mean(const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double sample_variance(const std::vector<double>& v, double mean) {
    double acc = 0.0;
    for (double x : v) {
        acc += (x - mean) * (x - mean);
    }
    return acc / static_cast<double>(v.size() - 1);
}

} // namespace

double rank_sum_p(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() < 3 || b.size() < 3) {
        throw std::invalid_argument("rank_sum_p: need at least 3 samples per group");
    }
    const double n1 = static_cast<double>(a.size());
    const double n2 = static_cast<double>(b.size());
    const double n = n1 + n2;

    std::vector<double> pooled;
    pooled.reserve(a.size() + b.size());
    pooled.insert(pooled.end(), a.begin(), a.end());
    pooled.insert(pooled.end(), b.begin(), b.end());
    const RankInfo info = midranks(pooled);

    double rank_sum_a = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        rank_sum_a += info.ranks[i];
    }
    const double u = rank_sum_a - n1 * (n1 + 1.0) / 2.0;
    const double mean_u = n1 * n2 / 2.0;
    const double var_u = (n1 * n2 / 12.0) * ((n + 1.0) - info.tie_term / (n * (n - 1.0)));
    if (var_u <= 0.0) {
        return 1.0; // every pooled value tied
    }
    const double z = (std::abs(u - mean_u) - 0.5) / std::sqrt(var_u);
    return two_sided_p_from_z(z);
}

double signed_rank_p(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("signed_rank_p: paired samples must have equal size");
    }
    if (a.size() < 3) {
        throw std::invalid_argument("signed_rank_p: need at least 3 pairs");
    }
    std::vector<double> abs_diff;
    std::vector<int> sign;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        if (d != 0.0) {
            abs_diff.push_back(std::abs(d));
            sign.push_back(d > 0.0 ? 1 : -1);
        }
    }
    if (abs_diff.empty()) {
        return 1.0;
    }
    const RankInfo info = midranks(abs_diff);
    double w_plus = 0.0;
    for (std::size_t i = 0; i < abs_diff.size(); ++i) {
        if (sign[i] > 0) {
            w_plus += info.ranks[i];
        }
    }
    const double m = static_cast<double>(abs_diff.size());
    const double mean_w = m * (m + 1.0) / 4.0;
    const double var_w = m * (m + 1.0) * (2.0 * m + 1.0) / 24.0 - info.tie_term / 48.0;
    if (var_w <= 0.0) {
        return 1.0;
    }
    const double z = (std::abs(w_plus - mean_w) - 0.5) / std::sqrt(var_w);
    return two_sided_p_from_z(z);
}

double cohens_d(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() < 2 || b.size() < 2) {
        throw std::invalid_argument("cohens_d: need at least 2 samples per group");
    }
    const double mean_a = sample_mean(a);
    const double mean_b = sample_mean(b);
    const double var_a = sample_variance(a, mean_a);
    const double var_b = sample_variance(b, mean_b);
    const double df_a = static_cast<double>(a.size() - 1);
    const double df_b = static_cast<double>(b.size() - 1);
    const double pooled_var = (df_a * var_a + df_b * var_b) / (df_a + df_b);
    const double mean_gap = std::abs(mean_a - mean_b);
    if (pooled_var <= 0.0) {
        if (mean_gap == 0.0) {
            return 0.0;
        }
        return std::numeric_limits<double>::infinity();
    }
    return mean_gap / std::sqrt(pooled_var);
}

KillOutcome is_killed(const std::vector<double>& orig_metrics,
                      const std::vector<double>& mut_metrics, RankTest test) {
    KillOutcome out;
    out.original_samples = orig_metrics;
    out.mutant_samples = mut_metrics;
    out.p_value = test == RankTest::paired ? signed_rank_p(orig_metrics, mut_metrics)
                                           : rank_sum_p(orig_metrics, mut_metrics);
    out.effect_size = cohens_d(orig_metrics, mut_metrics);
    out.killed = out.p_value < kKillPValueCutoff && out.effect_size >= kKillEffectSizeCutoff;
    return out;
}

} // namespace metisforge::stats
