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

#include "metisforge/fitness/eval.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace metisforge::fitness {

EvalOutcome eval_classifier(std::span<const double> prediction, int expected_label) {
    if (prediction.empty()) {
        throw std::invalid_argument("eval_classifier: empty prediction vector");
    }
    if (expected_label < 0 || static_cast<std::size_t>(expected_label) >= prediction.size()) {
        throw std::invalid_argument("eval_classifier: expected label out of range");
    }
    const double total = std::accumulate(prediction.begin(), prediction.end(), 0.0);
    if (std::abs(total - 1.0) > 1e-6) {
        throw std::invalid_argument("eval_classifier: prediction must sum to 1");
    }
    const double expected_conf = prediction[static_cast<std::size_t>(expected_label)];
    double max_other = 0.0;
    for (std::size_t i = 0; i < prediction.size(); ++i) {
        if (i != static_cast<std::size_t>(expected_label)) {
            max_other = std::max(max_other, prediction[i]);
        }
    }
    EvalOutcome out;
    if (expected_conf >= max_other) {
        out.correct = true;
        out.closeness = expected_conf - max_other;
    } else {
        out.correct = false;
        out.closeness = -1.0;
    }
    return out;
}

double gaze_angle_error(double pitch_a, double yaw_a, double pitch_b, double yaw_b) {
    const auto to_vec = [](double pitch, double yaw, double v[3]) {
        v[0] = std::cos(pitch) * std::sin(yaw);
        v[1] = std::sin(pitch);
        v[2] = std::cos(pitch) * std::cos(yaw);
    };
    double a[3];
    double b[3];
    to_vec(pitch_a, yaw_a, a);
    to_vec(pitch_b, yaw_b, b);
    const double dot = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
    const double cx = a[1] * b[2] - a[2] * b[1];
    const double cy = a[2] * b[0] - a[0] * b[2];
    const double cz = a[0] * b[1] - a[1] * b[0];
    const double cross_norm = std::sqrt(cx * cx + cy * cy + cz * cz);
    return std::atan2(cross_norm, dot);
}

EvalOutcome eval_regressor(double predicted_pitch, double predicted_yaw, double truth_pitch,
                           double truth_yaw, const RegressionTolerance& tol) {
    const double error = gaze_angle_error(predicted_pitch, predicted_yaw, truth_pitch, truth_yaw);
    EvalOutcome out;
    out.closeness = tol.max_error - error;
    out.correct = out.closeness >= 0.0;
    return out;
}

} // namespace metisforge::fitness
