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

#ifndef METISFORGE_HARNESS_MUTATION_HPP_
#define METISFORGE_HARNESS_MUTATION_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "metisforge/common/rng.hpp"
#include "metisforge/harness/dataset.hpp"
#include "metisforge/harness/train.hpp"

namespace metisforge::harness {

// A trainable-model mutation. Continuous operators (TCL, TRD, TUD, TAN, TCO,
// HLR, HNE) carry `param`: a removal/perturbation percentage for the data
// operators, the literal learning rate for HLR and the literal epoch count
// for HNE. Discrete operators carry `discrete_value`: "layer:activation" for
// ACH, "layer" for ARM, an init scheme name for WCI. Label-targeted data
// operators pin their class targets in `target_label` / `second_label`.
struct MutationSpec {
    std::string op;
    double param = 0.0;
    std::string discrete_value;
    int target_label = -1; // TCL: relabeled class; TUD: thinned class; TCO: class A
    int second_label = -1; // TCO: class B
};

bool is_continuous_operator(const std::string& op);
bool is_percentage_operator(const std::string& op);
bool is_known_operator(const std::string& op);

// Number of affected rows for a percentage operator: round-half-up of
// percentage * eligible.
std::size_t affected_row_count(double percentage, std::size_t eligible);

// Aggressiveness mappings for the training-hyperparameter operators, so a
// single increasing [0, 0.99] axis drives every continuous operator: HLR
// scales the learning rate geometrically down to base/1000; HNE shrinks the
// epoch count linearly toward zero.
double hlr_learning_rate(double base_learning_rate, double aggressiveness);
int hne_epochs(int base_epochs, double aggressiveness);

// Applies the mutation to fresh copies of the training split and spec. The
// test split is never touched. Data operators draw their row choices from
// `rng`; percentage parameters outside [0, 0.99] are rejected because the
// most aggressive configuration must leave some training data in place.
std::pair<Dataset, TrainSpec> apply_mutation(const Dataset& ds, const TrainSpec& spec,
                                             const MutationSpec& mu, Rng& rng);

struct ModelInstanceSet {
    std::vector<TinyModel> instances;
    std::optional<MutationSpec> mutation; // nullopt for original instances
    std::uint64_t base_seed = 0;

    std::size_t size() const { return instances.size(); }
};

// Trains n instances; instance k uses rng_seed = base_seed + k and, when a
// mutation is given, applies it with a per-instance mutation stream also
// seeded base_seed + k (data mutations resample per instance).
ModelInstanceSet build_instances(const Dataset& ds, const TrainSpec& spec,
                                 const std::optional<MutationSpec>& mu, int n,
                                 std::uint64_t base_seed);

} // namespace metisforge::harness

#endif // METISFORGE_HARNESS_MUTATION_HPP_
