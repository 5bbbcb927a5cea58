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

#include "metisforge/analysis/score.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace metisforge::analysis {

bool likely_equivalent(const OperatorSearchResult& train_result) {
    return train_result.killed_region_empty();
}

double mutation_score(const OperatorSearchResult& test_result,
                      const OperatorSearchResult& train_result) {
    if (test_result.op != train_result.op || test_result.kind != train_result.kind) {
        throw std::invalid_argument("mutation_score: results are for different operators");
    }
    if (train_result.killed_region_empty()) {
        throw std::runtime_error("operator likely equivalent; MS undefined");
    }
    if (train_result.kind == SearchKind::continuous) {
        if (test_result.lo != train_result.lo || test_result.hi != train_result.hi) {
            throw std::invalid_argument("mutation_score: results cover different ranges");
        }
        if (test_result.none_killed) {
            return 0.0;
        }
        const double hi = train_result.hi;
        const double train_len = hi - train_result.boundary;
        const double joint_len = hi - std::max(test_result.boundary, train_result.boundary);
        return std::clamp(joint_len / train_len, 0.0, 1.0);
    }
    std::size_t joint = 0;
    for (const std::string& value : train_result.killed_set) {
        if (std::find(test_result.killed_set.begin(), test_result.killed_set.end(), value) !=
            test_result.killed_set.end()) {
            ++joint;
        }
    }
    return static_cast<double>(joint) / static_cast<double>(train_result.killed_set.size());
}

double killing_probability(SearchKind kind, const std::vector<double>& per_run_outcomes) {
    (void)kind; // continuous and discrete entries both average arithmetically
    if (per_run_outcomes.empty()) {
        throw std::invalid_argument("killing_probability: need at least one run");
    }
    const double total =
        std::accumulate(per_run_outcomes.begin(), per_run_outcomes.end(), 0.0);
    return total / static_cast<double>(per_run_outcomes.size());
}

} // namespace metisforge::analysis
