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

#ifndef METISFORGE_FITNESS_EVAL_HPP_
#define METISFORGE_FITNESS_EVAL_HPP_

#include <span>

namespace metisforge::fitness {

// How a single model instance behaved on one input. `closeness` measures the
// margin to misbehaviour: negative iff the instance misbehaved.
struct EvalOutcome {
    bool correct = false;
    double closeness = 0.0;
};

// Acceptable angular error for gaze regression, stored in radians.
struct RegressionTolerance {
    double max_error = 5.0 * 3.14159265358979323846 / 180.0;
};

// Classification: closeness is the confidence margin of the expected class
// over the best other class when the prediction is correct (ties count as
// correct with margin 0), and a flat -1 on misclassification.
EvalOutcome eval_classifier(std::span<const double> prediction, int expected_label);

// Regression: error is the angle between the 3D unit gaze vectors induced by
// the (pitch, yaw) pairs; closeness = tolerance - error, with the exact
// tolerance boundary counted as correct.
EvalOutcome eval_regressor(double predicted_pitch, double predicted_yaw, double truth_pitch,
                           double truth_yaw, const RegressionTolerance& tol);

// Angle in radians between the unit gaze vectors for two (pitch, yaw) pairs.
double gaze_angle_error(double pitch_a, double yaw_a, double pitch_b, double yaw_b);

} // namespace metisforge::fitness

#endif // METISFORGE_FITNESS_EVAL_HPP_
