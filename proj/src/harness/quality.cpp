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

#include "metisforge/harness/quality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "metisforge/fitness/eval.hpp"

namespace metisforge::harness {

namespace {

std::size_t argmax_first(const std::vector<double>& values) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] > values[best]) {
            best = i;
        }
    }
    return best;
}

double predicted_confidence(const TinyModel& model, const std::vector<double>& input) {
    const std::vector<double> prediction = model.predict(input);
    return prediction[argmax_first(prediction)];
}

} // namespace

double quality_metric(const TinyModel& model, const DataSplit& test) {
    if (test.size() == 0) {
        throw std::invalid_argument("quality_metric: empty test split");
    }
    std::size_t hits = 0;
    if (model.task == Task::classification) {
        for (std::size_t i = 0; i < test.size(); ++i) {
            const std::vector<double> prediction = model.predict(test.inputs[i]);
            if (argmax_first(prediction) == static_cast<std::size_t>(test.labels[i])) {
                ++hits;
            }
        }
    } else {
        const fitness::RegressionTolerance tolerance;
        for (std::size_t i = 0; i < test.size(); ++i) {
            const std::vector<double> prediction = model.predict(test.inputs[i]);
            const double error =
                fitness::gaze_angle_error(prediction[0], prediction[1],
                                          test.targets[i].first, test.targets[i].second);
            if (error <= tolerance.max_error) {
                ++hits;
            }
        }
    }
    return static_cast<double>(hits) / static_cast<double>(test.size());
}

double mean_angular_error(const TinyModel& model, const DataSplit& test) {
    if (model.task != Task::regression) {
        throw std::invalid_argument("mean_angular_error: regression models only");
    }
    if (test.size() == 0) {
        throw std::invalid_argument("mean_angular_error: empty test split");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < test.size(); ++i) {
        const std::vector<double> prediction = model.predict(test.inputs[i]);
        total += fitness::gaze_angle_error(prediction[0], prediction[1],
                                           test.targets[i].first, test.targets[i].second);
    }
    return total / static_cast<double>(test.size());
}

std::vector<std::size_t> weak_test_indices(const DataSplit& test,
                                           const ModelInstanceSet& originals, Task task,
                                           const WeakSetOptions& options) {
    if (test.size() == 0) {
        throw std::invalid_argument("derive_weak_test_set: empty test split");
    }
    if (originals.instances.empty()) {
        throw std::invalid_argument("derive_weak_test_set: no trained instances");
    }

    std::vector<std::size_t> kept;
    if (task == Task::classification) {
        const std::size_t judged =
            options.use_all_instances ? originals.instances.size() : 1;
        for (std::size_t i = 0; i < test.size(); ++i) {
            bool keep = true;
            for (std::size_t k = 0; k < judged; ++k) {
                if (predicted_confidence(originals.instances[k], test.inputs[i]) <
                    options.confidence_threshold) {
                    keep = false;
                    break;
                }
            }
            if (keep) {
                kept.push_back(i);
            }
        }
        if (kept.empty()) {
            throw std::runtime_error(
                "derive_weak_test_set: no input reaches the confidence threshold; "
                "try a looser threshold");
        }
    } else {
        if (!(options.remove_fraction >= 0.0 && options.remove_fraction <= 1.0)) {
            throw std::invalid_argument(
                "derive_weak_test_set: remove_fraction must lie in [0, 1]");
        }
        // Spread (population std) of the squared prediction error across the
        // retrained instances; stable inputs carry the least killing power.
        std::vector<std::pair<double, std::size_t>> spread(test.size());
        for (std::size_t i = 0; i < test.size(); ++i) {
            std::vector<double> losses;
            losses.reserve(originals.instances.size());
            for (const TinyModel& model : originals.instances) {
                const std::vector<double> prediction = model.predict(test.inputs[i]);
                const double dp = prediction[0] - test.targets[i].first;
                const double dy = prediction[1] - test.targets[i].second;
                losses.push_back(dp * dp + dy * dy);
            }
            const double mean = std::accumulate(losses.begin(), losses.end(), 0.0) /
                                static_cast<double>(losses.size());
            double var = 0.0;
            for (double loss : losses) {
                var += (loss - mean) * (loss - mean);
            }
            var /= static_cast<double>(losses.size());
            spread[i] = {std::sqrt(var), i};
        }
        std::sort(spread.begin(), spread.end());
        const std::size_t removed = affected_row_count(options.remove_fraction, test.size());
        if (removed >= test.size()) {
            throw std::runtime_error(
                "derive_weak_test_set: removal would empty the test split; "
                "try a smaller fraction");
        }
        for (std::size_t i = removed; i < spread.size(); ++i) {
            kept.push_back(spread[i].second);
        }
        std::sort(kept.begin(), kept.end());
    }
    return kept;
}

DataSplit derive_weak_test_set(const DataSplit& test, const ModelInstanceSet& originals,
                               Task task, const WeakSetOptions& options) {
    return subset(test, task, weak_test_indices(test, originals, task, options));
}

} // namespace metisforge::harness
