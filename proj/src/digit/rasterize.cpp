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

#include "metisforge/digit/rasterize.hpp"

#include <algorithm>
#include <cmath>

namespace metisforge::digit {

namespace {

double point_line_distance_sq(const Point& p, const Point& a, const Point& b) {
    const double abx = b.x - a.x;
    const double aby = b.y - a.y;
    const double len_sq = abx * abx + aby * aby;
    if (len_sq == 0.0) {
        const double dx = p.x - a.x;
        const double dy = p.y - a.y;
        return dx * dx + dy * dy;
    }
    // Distance to the infinite line is enough for a flatness test: control
    // points of a flat cubic hug the chord line.
    const double cross = (p.x - a.x) * aby - (p.y - a.y) * abx;
    return cross * cross / len_sq;
}

bool flat_enough(const CubicSegment& seg, double tol_sq) {
    return point_line_distance_sq(seg.c1, seg.start, seg.end) <= tol_sq &&
           point_line_distance_sq(seg.c2, seg.start, seg.end) <= tol_sq;
}

void split_segment(const CubicSegment& seg, CubicSegment& left, CubicSegment& right) {
    const auto mid = [](const Point& a, const Point& b) {
        return Point{(a.x + b.x) / 2.0, (a.y + b.y) / 2.0};
    };
    const Point ab = mid(seg.start, seg.c1);
    const Point bc = mid(seg.c1, seg.c2);
    const Point cd = mid(seg.c2, seg.end);
    const Point abbc = mid(ab, bc);
    const Point bccd = mid(bc, cd);
    const Point center = mid(abbc, bccd);
    left = {seg.start, ab, abbc, center};
    right = {center, bccd, cd, seg.end};
}

void flatten_into(const CubicSegment& seg, double tol_sq, int depth, std::vector<Point>& out) {
    if (depth >= 24 || flat_enough(seg, tol_sq)) {
        out.push_back(seg.end);
        return;
    }
    CubicSegment left;
    CubicSegment right;
    split_segment(seg, left, right);
    flatten_into(left, tol_sq, depth + 1, out);
    flatten_into(right, tol_sq, depth + 1, out);
}

struct Edge {
    double x0, y0, x1, y1;
    int winding; // +1 when the edge crosses a scanline downward in y
};

} // namespace

std::vector<Point> flatten_segment(const CubicSegment& seg, double tolerance) {
    std::vector<Point> points;
    points.push_back(seg.start);
    flatten_into(seg, tolerance * tolerance, 0, points);
    return points;
}

std::array<std::uint8_t, kGridPixels> rasterize(const PathModel& model) {
    validate(model);

    std::vector<Edge> edges;
    for (const Subpath& sub : model.subpaths) {
        for (const CubicSegment& seg : sub.segments) {
            const std::vector<Point> line = flatten_segment(seg, kFlattenTolerance);
            for (std::size_t i = 0; i + 1 < line.size(); ++i) {
                const Point& a = line[i];
                const Point& b = line[i + 1];
                if (a.y == b.y) {
                    continue; // horizontal chords never cross a scanline
                }
                edges.push_back({a.x, a.y, b.x, b.y, b.y > a.y ? 1 : -1});
            }
        }
    }

    const int side = kGridSide * kSupersample;
    std::array<std::uint32_t, kGridPixels> coverage{};
    std::vector<std::pair<double, int>> crossings;
    for (int sy = 0; sy < side; ++sy) {
        const double y = (static_cast<double>(sy) + 0.5) / kSupersample;
        crossings.clear();
        for (const Edge& e : edges) {
            const double ymin = std::min(e.y0, e.y1);
            const double ymax = std::max(e.y0, e.y1);
            if (y < ymin || y >= ymax) {
                continue; // half-open span keeps shared vertices single-counted
            }
            const double t = (y - e.y0) / (e.y1 - e.y0);
            crossings.emplace_back(e.x0 + t * (e.x1 - e.x0), e.winding);
        }
        std::sort(crossings.begin(), crossings.end());
        std::size_t next = 0;
        int winding = 0;
        const int row = sy / kSupersample;
        for (int sx = 0; sx < side; ++sx) {
            const double x = (static_cast<double>(sx) + 0.5) / kSupersample;
            while (next < crossings.size() && crossings[next].first <= x) {
                winding += crossings[next].second;
                ++next;
            }
            if (winding != 0) {
                ++coverage[static_cast<std::size_t>(row) * kGridSide + sx / kSupersample];
            }
        }
    }

    const double samples_per_cell = static_cast<double>(kSupersample) * kSupersample;
    std::array<std::uint8_t, kGridPixels> grid{};
    for (int i = 0; i < kGridPixels; ++i) {
        const double value = 255.0 * static_cast<double>(coverage[i]) / samples_per_cell;
        grid[i] = static_cast<std::uint8_t>(std::lround(value));
    }
    return grid;
}

DigitInput rasterize_labeled(const PathModel& model, int label) {
    DigitInput input;
    input.grid = rasterize(model);
    input.label = label;
    return input;
}

} // namespace metisforge::digit
