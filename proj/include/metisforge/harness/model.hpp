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

#ifndef METISFORGE_HARNESS_MODEL_HPP_
#define METISFORGE_HARNESS_MODEL_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "metisforge/harness/dataset.hpp"

namespace metisforge::harness {

// Feedforward network. layer_sizes runs input -> hidden... -> output; the
// output activation is implied by the task (softmax for classification,
// identity for regression). `activations` covers the hidden layers.
struct TinyModel {
    Task task = Task::classification;
    std::vector<int> layer_sizes;
    std::vector<std::string> activations;
    std::vector<Eigen::MatrixXd> weights; // weights[l] is (out x in)
    std::vector<Eigen::VectorXd> biases;
    std::uint64_t spec_hash = 0; // training fingerprint
    std::uint64_t seed = 0;

    // Forward pass; classification outputs are softmax probabilities.
    Eigen::VectorXd forward(const Eigen::VectorXd& input) const;
    std::vector<double> predict(const std::vector<double>& input) const;

    // Stable identity of a trained instance: spec hash + seed.
    std::uint64_t fingerprint() const;
};

double apply_activation_scalar(const std::string& name, double x);

// Versioned binary model files (magic "MFMD", row-major 64-bit floats,
// little-endian). Round-trips weights bit-for-bit.
void save_model(const std::filesystem::path& path, const TinyModel& model);
TinyModel load_model(const std::filesystem::path& path);

} // namespace metisforge::harness

#endif // METISFORGE_HARNESS_MODEL_HPP_
