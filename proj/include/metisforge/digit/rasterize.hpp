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

#ifndef METISFORGE_DIGIT_RASTERIZE_HPP_
#define METISFORGE_DIGIT_RASTERIZE_HPP_

#include <array>
#include <cstdint>
#include <vector>

#include "metisforge/digit/path_model.hpp"

namespace metisforge::digit {

// Curve flattening and rendering constants, pinned for reproducibility.
inline constexpr double kFlattenTolerance = 0.1; // canvas units
inline constexpr int kSupersample = 8;           // samples per axis per cell

// Adaptively subdivides one cubic segment into a polyline whose chords stay
// within kFlattenTolerance of the curve. The returned points include the
// segment start and end.
std::vector<Point> flatten_segment(const CubicSegment& seg, double tolerance);

// Renders the model onto the 28x28 grid: flatten every segment, fill with the
// nonzero-winding rule at kSupersample x kSupersample coverage samples per
// cell, and map coverage to 0-255. Deterministic for identical models.
std::array<std::uint8_t, kGridPixels> rasterize(const PathModel& model);

DigitInput rasterize_labeled(const PathModel& model, int label);

} // namespace metisforge::digit

#endif // METISFORGE_DIGIT_RASTERIZE_HPP_
