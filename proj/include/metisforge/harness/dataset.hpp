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

#ifndef METISFORGE_HARNESS_DATASET_HPP_
#define METISFORGE_HARNESS_DATASET_HPP_

#include <cstdint>
#include <filesystem>
#include <utility>
#include <vector>

namespace metisforge::harness {

enum class Task : std::uint8_t { classification = 0, regression = 1 };

// One side of the train/test partition. Classification rows use `labels`,
// regression rows use `targets` (pitch, yaw); the unused list stays empty.
struct DataSplit {
    std::vector<std::vector<double>> inputs;
    std::vector<int> labels;
    std::vector<std::pair<double, double>> targets;

    std::size_t size() const { return inputs.size(); }
};

struct Dataset {
    Task task = Task::classification;
    int input_dim = 0;
    int num_classes = 0; // 0 for regression
    DataSplit train;
    DataSplit test;
};

// Structural sanity: aligned row counts, consistent dimensions, labels in
// range. Throws std::invalid_argument on violation.
void validate(const Dataset& ds);
void validate_split(const DataSplit& split, Task task, int input_dim, int num_classes);

// Content fingerprints; any change to a row, label, or target changes them.
std::uint64_t split_hash(const DataSplit& split, Task task);
std::uint64_t dataset_hash(const Dataset& ds);

// New split holding the given rows, in the given order. Indices must be in
// range; duplicates are allowed.
DataSplit subset(const DataSplit& split, Task task, const std::vector<std::size_t>& rows);

// Versioned binary dataset files (magic "MFDS", little-endian payload).
void save_dataset(const std::filesystem::path& path, const Dataset& ds);
Dataset load_dataset(const std::filesystem::path& path);

} // namespace metisforge::harness

#endif // METISFORGE_HARNESS_DATASET_HPP_
