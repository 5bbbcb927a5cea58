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

#ifndef METISFORGE_FITNESS_OBJECTIVES_HPP_
#define METISFORGE_FITNESS_OBJECTIVES_HPP_

#include <limits>
#include <span>
#include <vector>

#include "metisforge/fitness/eval.hpp"

namespace metisforge::fitness {

// The two search objectives: f1 (sum of misbehaviour closeness over mutant
// instances) is minimized, f2 (sparseness relative to the archive) is
// maximized. f2 holds +infinity while the archive is empty.
struct FitnessPair {
    double f1 = 0.0;
    double f2 = std::numeric_limits<double>::infinity();
};

// Pareto dominance for (minimize f1, maximize f2). Two +infinity f2 values
// compare equal, so the sentinel needs no special casing.
bool dominates(const FitnessPair& a, const FitnessPair& b);

// Sum of closeness values over the mutant-instance outcomes.
double fitness_f1(const std::vector<EvalOutcome>& mutant_outcomes);

// Sparseness: minimum of the distances from the individual to each archive
// entry other than itself; +infinity when no such entry exists.
double fitness_f2(const std::vector<double>& distances_to_archive);

// Euclidean distance between two flattened pixel-intensity vectors.
double pixel_distance(std::span<const double> a, std::span<const double> b);

// An individual is worth archiving when it behaves correctly on at least one
// original instance and misbehaves on at least one mutant instance.
bool is_solution_candidate(const std::vector<EvalOutcome>& original_outcomes,
                           const std::vector<EvalOutcome>& mutant_outcomes);

} // namespace metisforge::fitness

#endif // METISFORGE_FITNESS_OBJECTIVES_HPP_
