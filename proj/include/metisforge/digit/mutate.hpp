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

#ifndef METISFORGE_DIGIT_MUTATE_HPP_
#define METISFORGE_DIGIT_MUTATE_HPP_

#include "metisforge/common/rng.hpp"
#include "metisforge/digit/path_model.hpp"

namespace metisforge::digit {

// Displacement magnitude range for one mutation step, in canvas units.
struct MutationExtent {
    double lo = 1.0;
    double hi = 3.0;
};

// Returns a copy of the model with exactly one point (junction or control,
// chosen uniformly) displaced along one of the four axis directions by a
// magnitude drawn uniformly from the extent, clamped to the canvas.
PathModel mutate_digit(const PathModel& model, const MutationExtent& extent, Rng& rng);

} // namespace metisforge::digit

#endif // METISFORGE_DIGIT_MUTATE_HPP_
