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

#include "metisforge/fitness/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace metisforge::fitness {

bool dominates(const FitnessPair& a, const FitnessPair& b) {
    if (a.f1 > b.f1 || a.f2 < b.f2) {
        return false;
    }
    return a.f1 < b.f1 || a.f2 > b.f2;
}

double fitness_f1(const std::vector<EvalOutcome>& mutant_outcomes) {
    if (mutant_outcomes.empty()) {
        throw std::invalid_argument("fitness_f1: need at least one mutant instance");
    }
    double sum = 0.0;
    for (const EvalOutcome& outcome : mutant_outcomes) {
        sum += outcome.closeness;
    }
    return sum;
}

double fitness_f2(const std::vector<double>& distances_to_archive) {
    if (distances_to_archive.empty()) {
        return std::numeric_limits<double>::infinity();
    }
    return *std::min_element(distances_to_archive.begin(), distances_to_archive.end());
}

double pixel_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("pixel_distance: grids have different shapes");
    }
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double diff = a[i] - b[i];
        sum_sq += diff * diff;
    }
    return std::sqrt(sum_sq);
}

bool is_solution_candidate(const std::vector<EvalOutcome>& original_outcomes,
                           const std::vector<EvalOutcome>& mutant_outcomes) {
    const bool correct_somewhere =
        std::any_of(original_outcomes.begin(), original_outcomes.end(),
                    [](const EvalOutcome& o) { return o.correct; });
    const bool misbehaves_somewhere =
        std::any_of(mutant_outcomes.begin(), mutant_outcomes.end(),
                    [](const EvalOutcome& o) { return !o.correct; });
    return correct_somewhere && misbehaves_somewhere;
}

} // namespace metisforge::fitness
