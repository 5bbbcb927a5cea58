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

#ifndef METISFORGE_HARNESS_QUALITY_HPP
#define METISFORGE_HARNESS_QUALITY_HPP

#include "metisforge/harness/dataset.hpp"
#include "metisforge/harness/model.hpp"
#include "metisforge/harness/mutation.hpp"

namespace metisforge::harness {

// Scalar quality of a trained model on a test split, in [0, 1].
// Classification: accuracy under argmax (first maximum wins ties).
// Regression: fraction of inputs whose angular error is at most the shared
// regression tolerance (5 degrees).
double quality_metric(const TinyModel& model, const DataSplit& test);

// Mean angular error (radians) of a regression model over a test split.
// Logged alongside the thresholded quality metric for diagnostics.
double mean_angular_error(const TinyModel& model, const DataSplit& test);

struct WeakSetOptions {
    // Classification: keep an input only when the predicted-class confidence
    // reaches this threshold (defaults to "essentially certain").
    double confidence_threshold = 1.0 - 1e-6;
    // When false, confidence is judged on the first model instance alone;
    // when true, every instance must reach the threshold.
    bool use_all_instances = false;
    // Regression: fraction of inputs to drop, taken from the low end of the
    // per-input spread of squared error across instances.
    double remove_fraction = 0.5;
};

// Indices (ascending) of the test inputs that survive the weakening below.
std::vector<std::size_t> weak_test_indices(const DataSplit& test,
                                           const ModelInstanceSet& originals, Task task,
                                           const WeakSetOptions& options = {});

// Derives a deliberately weakened test split: the inputs least able to expose
// behavioural differences between retrained model instances are retained
// (classification) or the most stable ones removed (regression).
DataSplit derive_weak_test_set(const DataSplit& test, const ModelInstanceSet& originals,
                               Task task, const WeakSetOptions& options = {});

} // namespace metisforge::harness

#endif // METISFORGE_HARNESS_QUALITY_HPP
