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

#ifndef METISFORGE_SEARCH_INDIVIDUAL_HPP
#define METISFORGE_SEARCH_INDIVIDUAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "metisforge/fitness/eval.hpp"
#include "metisforge/fitness/objectives.hpp"

namespace metisforge::search {

// A candidate test input. The genotype is the editable representation, the
// phenotype the concrete model input derived from it; the phenotype is kept
// in sync with the genotype by the engine (expressed on creation and after
// every mutation). `evaluated` guards the model-behaviour fields: outcomes
// and f1 are valid only while it is true, whereas f2 is refreshed against
// the current archive every generation regardless.
template <typename Domain>
struct Individual {
    std::uint64_t id = 0;
    typename Domain::Genotype genotype{};
    typename Domain::Phenotype phenotype{};
    std::string seed_origin;

    fitness::FitnessPair fitness{};
    std::vector<fitness::EvalOutcome> original_outcomes;
    std::vector<fitness::EvalOutcome> mutant_outcomes;
    bool evaluated = false;

    int rank = -1;
    double crowding = 0.0;

    bool misbehaves_on_all_originals() const {
        for (const fitness::EvalOutcome& outcome : original_outcomes) {
            if (outcome.correct) {
                return false;
            }
        }
        return true;
    }

    bool is_candidate() const {
        return fitness::is_solution_candidate(original_outcomes, mutant_outcomes);
    }
};

} // namespace metisforge::search

#endif // METISFORGE_SEARCH_INDIVIDUAL_HPP
