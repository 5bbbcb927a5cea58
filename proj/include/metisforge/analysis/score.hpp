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

#ifndef METISFORGE_ANALYSIS_SCORE_HPP_
#define METISFORGE_ANALYSIS_SCORE_HPP_

#include <vector>

#include "metisforge/analysis/config_search.hpp"

namespace metisforge::analysis {

// True iff the training set failed to kill any configuration of the operator,
// which marks the operator as a likely-equivalent mutant family and excludes
// it from scoring and from input generation targets.
bool likely_equivalent(const OperatorSearchResult& train_result);

// Mutation score of a test-set search outcome relative to the training-set
// outcome for the same operator. Continuous operators compare killed
// intervals (boundary, hi]; discrete operators compare killed sets.
// Throws if the training set killed nothing (score undefined).
double mutation_score(const OperatorSearchResult& test_result,
                      const OperatorSearchResult& train_result);

// Averages per-run outcomes: continuous runs contribute their mutation score,
// discrete runs contribute 1.0 when killed and 0.0 otherwise.
double killing_probability(SearchKind kind, const std::vector<double>& per_run_outcomes);

} // namespace metisforge::analysis

#endif // METISFORGE_ANALYSIS_SCORE_HPP_
