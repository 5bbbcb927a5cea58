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

#include "metisforge/digit/path_model.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace metisforge::digit {

void validate(const PathModel& model) {
    if (model.subpaths.empty()) {
        throw std::invalid_argument("path model: no subpaths");
    }
    for (std::size_t s = 0; s < model.subpaths.size(); ++s) {
        const Subpath& sub = model.subpaths[s];
        if (sub.segments.empty()) {
            throw std::invalid_argument("path model: subpath " + std::to_string(s) +
                                        " has no segments");
        }
        for (std::size_t k = 0; k < sub.segments.size(); ++k) {
            const CubicSegment& seg = sub.segments[k];
            const CubicSegment& next = sub.segments[(k + 1) % sub.segments.size()];
            if (seg.end.x != next.start.x || seg.end.y != next.start.y) {
                throw std::invalid_argument("path model: subpath " + std::to_string(s) +
                                            " is not closed at segment " + std::to_string(k));
            }
        }
    }
}

Point bezier_point(const CubicSegment& seg, double t) {
    const double u = 1.0 - t;
    const double b0 = u * u * u;
    const double b1 = 3.0 * u * u * t;
    const double b2 = 3.0 * u * t * t;
    const double b3 = t * t * t;
    return {b0 * seg.start.x + b1 * seg.c1.x + b2 * seg.c2.x + b3 * seg.end.x,
            b0 * seg.start.y + b1 * seg.c1.y + b2 * seg.c2.y + b3 * seg.end.y};
}

std::size_t point_count(const PathModel& model) {
    std::size_t total = 0;
    for (const Subpath& sub : model.subpaths) {
        total += 3 * sub.segments.size();
    }
    return total;
}

PointRef point_ref_at(const PathModel& model, std::size_t flat_index) {
    for (std::size_t s = 0; s < model.subpaths.size(); ++s) {
        const std::size_t here = 3 * model.subpaths[s].segments.size();
        if (flat_index < here) {
            return {s, flat_index / 3, static_cast<int>(flat_index % 3)};
        }
        flat_index -= here;
    }
    throw std::out_of_range("path model: point index out of range");
}

Point get_point(const PathModel& model, const PointRef& ref) {
    const CubicSegment& seg = model.subpaths[ref.subpath].segments[ref.segment];
    switch (ref.which) {
    case 0:
        return seg.start;
    case 1:
        return seg.c1;
    default:
        return seg.c2;
    }
}

void displace_point(PathModel& model, const PointRef& ref, double dx, double dy) {
    Subpath& sub = model.subpaths[ref.subpath];
    CubicSegment& seg = sub.segments[ref.segment];
    const auto clamp_move = [&](const Point& p) {
        return Point{std::clamp(p.x + dx, 0.0, kCanvasSize), std::clamp(p.y + dy, 0.0, kCanvasSize)};
    };
    switch (ref.which) {
    case 0: {
        const Point moved = clamp_move(seg.start);
        seg.start = moved;
        CubicSegment& prev =
            sub.segments[(ref.segment + sub.segments.size() - 1) % sub.segments.size()];
        prev.end = moved;
        break;
    }
    case 1:
        seg.c1 = clamp_move(seg.c1);
        break;
    default:
        seg.c2 = clamp_move(seg.c2);
        break;
    }
}

std::vector<double> to_pixel_vector(const DigitInput& input) {
    std::vector<double> out(input.grid.size());
    for (std::size_t i = 0; i < input.grid.size(); ++i) {
        out[i] = static_cast<double>(input.grid[i]);
    }
    return out;
}

} // namespace metisforge::digit
