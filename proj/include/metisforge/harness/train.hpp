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

#ifndef METISFORGE_HARNESS_TRAIN_HPP_
#define METISFORGE_HARNESS_TRAIN_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "metisforge/harness/dataset.hpp"
#include "metisforge/harness/model.hpp"

namespace metisforge::harness {

// Training hit a non-finite loss: the configuration is numerically unstable
// rather than misconfigured. Callers that evaluate deliberately damaged
// training setups can treat this as maximal misbehaviour instead of a fault.
struct TrainingDiverged : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TrainSpec {
    std::vector<int> hidden_sizes;
    std::vector<std::string> activations; // one per hidden layer
    int epochs = 1;                        // 0 keeps the initialization
    double learning_rate = 0.01;
    int batch_size = 32;
    std::string weight_init = "he_uniform";
    std::uint64_t rng_seed = 0;
    Task task = Task::classification;
};

void validate(const TrainSpec& spec);

// Fingerprint over every spec field; two specs hash equal iff they train the
// same function on the same data ordering.
std::uint64_t spec_hash(const TrainSpec& spec);

// Initialized but untrained network (weights per the init scheme, zero
// biases). output_dim is 10-way softmax for classification, 2 for regression.
TinyModel initialize_model(const TrainSpec& spec, int input_dim, int output_dim);

// Deterministic mini-batch gradient descent: per-epoch shuffles come from
// rng_seed, loss is cross-entropy (classification) or summed squared error on
// the angle pair (regression). A non-finite loss aborts with the epoch and
// batch in the message.
TinyModel train(const Dataset& ds, const TrainSpec& spec);

} // namespace metisforge::harness

#endif // METISFORGE_HARNESS_TRAIN_HPP_
