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

#ifndef METISFORGE_DIGIT_PATH_MODEL_HPP_
#define METISFORGE_DIGIT_PATH_MODEL_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace metisforge::digit {

inline constexpr int kGridSide = 28;
inline constexpr int kGridPixels = kGridSide * kGridSide;
inline constexpr double kCanvasSize = 28.0;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

struct CubicSegment {
    Point start;
    Point c1;
    Point c2;
    Point end;
};

// A closed run of cubic segments: each segment starts where the previous one
// ended, and the last segment ends at the first segment's start.
struct Subpath {
    std::vector<CubicSegment> segments;
};

struct PathModel {
    std::vector<Subpath> subpaths;
};

// 28x28 grayscale digit image, 0 = background.
struct DigitInput {
    std::array<std::uint8_t, kGridPixels> grid{};
    int label = 0;
};

struct SeedRecord {
    std::string id;
    PathModel model;
    int label = 0;
};

// Throws std::invalid_argument naming the offending subpath if the model has
// no drawable content or a subpath fails the closure invariant.
void validate(const PathModel& model);

// Point on a cubic segment at parameter t in [0, 1].
Point bezier_point(const CubicSegment& seg, double t);

// Addressable movable point: every segment contributes its start junction
// (shared with the previous segment's end) and its two control points.
struct PointRef {
    std::size_t subpath = 0;
    std::size_t segment = 0;
    int which = 0; // 0 = start junction, 1 = control 1, 2 = control 2
};

std::size_t point_count(const PathModel& model);
PointRef point_ref_at(const PathModel& model, std::size_t flat_index);
Point get_point(const PathModel& model, const PointRef& ref);

// Moves the addressed point by (dx, dy), clamped to the canvas. Junction
// moves update both segments sharing the point so closure is preserved.
void displace_point(PathModel& model, const PointRef& ref, double dx, double dy);

// Flattened copy of the grid as 0-255 doubles, row major.
std::vector<double> to_pixel_vector(const DigitInput& input);

} // namespace metisforge::digit

#endif // METISFORGE_DIGIT_PATH_MODEL_HPP_
