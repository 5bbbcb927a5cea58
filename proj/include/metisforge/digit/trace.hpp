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

#ifndef METISFORGE_DIGIT_TRACE_HPP_
#define METISFORGE_DIGIT_TRACE_HPP_

#include <array>
#include <cstdint>
#include <vector>

#include "metisforge/digit/path_model.hpp"

namespace metisforge::digit {

// Pinned tracing constants.
inline constexpr double kSimplifyTolerance = 0.5; // polyline reduction, canvas units
inline constexpr double kFitTolerance = 0.8;      // max curve-fit deviation, canvas units

// Closed contours of the binarized grid, walked over the pixel-corner lattice
// with ink kept on the left of travel, so outer boundaries and hole
// boundaries wind oppositely and nonzero-winding fill reproduces the region.
// Ink is treated as 4-connected; contours are emitted in deterministic order.
std::vector<std::vector<Point>> extract_contours(const std::vector<std::uint8_t>& ink, int width,
                                                 int height);

// Douglas-Peucker reduction of a closed polygon; returns the kept indices in
// ascending order (always at least two).
std::vector<std::size_t> simplify_closed(const std::vector<Point>& points, double tolerance);

// Vectorizes a grayscale grid: binarize at `threshold`, extract contours,
// simplify, then least-squares fit piecewise cubics between the kept corner
// vertices, splitting runs whose fit error exceeds kFitTolerance. Throws if
// no pixel reaches the threshold.
PathModel trace_bitmap(const std::array<std::uint8_t, kGridPixels>& grid, int threshold);

// Same pipeline for an arbitrary-size grid (used by corpus generation).
PathModel trace_bitmap_sized(const std::vector<std::uint8_t>& grid, int width, int height,
                             int threshold);

} // namespace metisforge::digit

#endif // METISFORGE_DIGIT_TRACE_HPP_
