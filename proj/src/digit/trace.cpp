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

#include "metisforge/digit/trace.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace metisforge::digit {

namespace {

// Directions on the corner lattice: E, W, S, N as (dx, dy) in y-down coords.
constexpr int kDx[4] = {1, -1, 0, 0};
constexpr int kDy[4] = {0, 0, 1, -1};

int left_turn_of(int dir) {
    // Visual left in y-down coordinates: (dx, dy) -> (dy, -dx).
    switch (dir) {
    case 0:
        return 3; // E -> N
    case 1:
        return 2; // W -> S
    case 2:
        return 0; // S -> E
    default:
        return 1; // N -> W
    }
}

int right_turn_of(int dir) {
    return left_turn_of(left_turn_of(left_turn_of(dir)));
}

struct EdgeGrid {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> present; // indexed by (corner, direction)
    std::vector<std::uint8_t> used;

    std::size_t index(int x, int y, int dir) const {
        return (static_cast<std::size_t>(y) * (width + 1) + static_cast<std::size_t>(x)) * 4 +
               static_cast<std::size_t>(dir);
    }
};

double point_segment_distance(const Point& p, const Point& a, const Point& b) {
    const double abx = b.x - a.x;
    const double aby = b.y - a.y;
    const double len_sq = abx * abx + aby * aby;
    double t = 0.0;
    if (len_sq > 0.0) {
        t = std::clamp(((p.x - a.x) * abx + (p.y - a.y) * aby) / len_sq, 0.0, 1.0);
    }
    const double dx = p.x - (a.x + t * abx);
    const double dy = p.y - (a.y + t * aby);
    return std::sqrt(dx * dx + dy * dy);
}

void douglas_peucker(const std::vector<Point>& points, std::size_t first, std::size_t last,
                     double tolerance, std::vector<std::size_t>& keep) {
    if (last <= first + 1) {
        return;
    }
    double max_dist = -1.0;
    std::size_t max_index = first;
    for (std::size_t i = first + 1; i < last; ++i) {
        const double d = point_segment_distance(points[i], points[first], points[last]);
        if (d > max_dist) {
            max_dist = d;
            max_index = i;
        }
    }
    if (max_dist > tolerance) {
        douglas_peucker(points, first, max_index, tolerance, keep);
        keep.push_back(max_index);
        douglas_peucker(points, max_index, last, tolerance, keep);
    }
}

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

Vec2 normalize(Vec2 v) {
    const double len = std::sqrt(v.x * v.x + v.y * v.y);
    if (len == 0.0) {
        return {1.0, 0.0};
    }
    return {v.x / len, v.y / len};
}

double dot(const Vec2& a, const Vec2& b) {
    return a.x * b.x + a.y * b.y;
}

// Least-squares fit of one cubic to points[first..last] with fixed end
// tangent directions; splits at the worst point while the deviation exceeds
// the tolerance. Appends segments covering the whole run.
void fit_cubic_run(const std::vector<Point>& points, std::size_t first, std::size_t last,
                   Vec2 tan_start, Vec2 tan_end, double tolerance, int depth,
                   std::vector<CubicSegment>& out) {
    const Point& p0 = points[first];
    const Point& p3 = points[last];
    const double chord = std::hypot(p3.x - p0.x, p3.y - p0.y);

    if (last - first == 1) {
        const double third = chord / 3.0;
        out.push_back({p0,
                       {p0.x + tan_start.x * third, p0.y + tan_start.y * third},
                       {p3.x + tan_end.x * third, p3.y + tan_end.y * third},
                       p3});
        return;
    }

    // Chord-length parameterization.
    std::vector<double> u(last - first + 1, 0.0);
    for (std::size_t i = first + 1; i <= last; ++i) {
        u[i - first] = u[i - first - 1] +
                       std::hypot(points[i].x - points[i - 1].x, points[i].y - points[i - 1].y);
    }
    const double total = u.back();
    for (double& v : u) {
        v = total > 0.0 ? v / total : 0.0;
    }

    // Solve the 2x2 normal equations for the two tangent magnitudes.
    double c00 = 0.0;
    double c01 = 0.0;
    double c11 = 0.0;
    double x0 = 0.0;
    double x1 = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double t = u[i];
        const double s = 1.0 - t;
        const double b0 = s * s * s;
        const double b1 = 3.0 * s * s * t;
        const double b2 = 3.0 * s * t * t;
        const double b3 = t * t * t;
        const Vec2 a0{tan_start.x * b1, tan_start.y * b1};
        const Vec2 a1{tan_end.x * b2, tan_end.y * b2};
        const Point& p = points[first + i];
        const Vec2 residual{p.x - ((b0 + b1) * p0.x + (b2 + b3) * p3.x),
                            p.y - ((b0 + b1) * p0.y + (b2 + b3) * p3.y)};
        c00 += dot(a0, a0);
        c01 += dot(a0, a1);
        c11 += dot(a1, a1);
        x0 += dot(a0, residual);
        x1 += dot(a1, residual);
    }
    const double det = c00 * c11 - c01 * c01;
    double alpha0 = 0.0;
    double alpha1 = 0.0;
    if (std::abs(det) > 1e-12) {
        alpha0 = (x0 * c11 - x1 * c01) / det;
        alpha1 = (c00 * x1 - c01 * x0) / det;
    }
    // Degenerate magnitudes fall back to the one-third-chord heuristic.
    const double max_alpha = 3.0 * std::max(chord, 1.0);
    if (!(alpha0 > 1e-9) || !(alpha1 > 1e-9) || alpha0 > max_alpha || alpha1 > max_alpha) {
        alpha0 = chord / 3.0;
        alpha1 = chord / 3.0;
    }

    CubicSegment candidate{p0,
                           {p0.x + tan_start.x * alpha0, p0.y + tan_start.y * alpha0},
                           {p3.x + tan_end.x * alpha1, p3.y + tan_end.y * alpha1},
                           p3};

    double max_err = 0.0;
    std::size_t worst = (first + last) / 2;
    for (std::size_t i = 1; i + 1 < u.size(); ++i) {
        const Point on_curve = bezier_point(candidate, u[i]);
        const Point& p = points[first + i];
        const double err = std::hypot(on_curve.x - p.x, on_curve.y - p.y);
        if (err > max_err) {
            max_err = err;
            worst = first + i;
        }
    }
    if (max_err <= tolerance || depth >= 12) {
        out.push_back(candidate);
        return;
    }
    const Vec2 center_tangent = normalize(
        {points[worst - 1].x - points[worst + 1].x, points[worst - 1].y - points[worst + 1].y});
    fit_cubic_run(points, first, worst, tan_start, center_tangent, tolerance, depth + 1, out);
    fit_cubic_run(points, worst, last, {-center_tangent.x, -center_tangent.y}, tan_end, tolerance,
                  depth + 1, out);
}

std::vector<CubicSegment> fit_contour(const std::vector<Point>& contour,
                                      const std::vector<std::size_t>& corners, double tolerance) {
    std::vector<CubicSegment> segments;
    const std::size_t m = corners.size();
    for (std::size_t k = 0; k < m; ++k) {
        const std::size_t begin = corners[k];
        const std::size_t end = corners[(k + 1) % m];
        // Materialize the run begin..end (wrapping past the closure point).
        std::vector<Point> run;
        std::size_t i = begin;
        run.push_back(contour[i]);
        do {
            i = (i + 1) % contour.size();
            run.push_back(contour[i]);
        } while (i != end);
        const Vec2 tan_start = normalize({run[1].x - run[0].x, run[1].y - run[0].y});
        const Vec2 tan_end = normalize({run[run.size() - 2].x - run.back().x,
                                        run[run.size() - 2].y - run.back().y});
        const std::size_t before = segments.size();
        fit_cubic_run(run, 0, run.size() - 1, tan_start, tan_end, tolerance, 0, segments);
        // Snap shared junctions to the exact corner values so closure holds
        // bit-for-bit after floating-point fitting.
        segments[before].start = contour[begin];
        segments.back().end = contour[end];
    }
    // Stitch interior junctions of consecutive segments exactly.
    for (std::size_t k = 0; k + 1 < segments.size(); ++k) {
        segments[k + 1].start = segments[k].end;
    }
    if (!segments.empty()) {
        segments.back().end = segments.front().start;
    }
    return segments;
}

} // namespace

std::vector<std::vector<Point>> extract_contours(const std::vector<std::uint8_t>& ink, int width,
                                                 int height) {
    const auto is_ink = [&](int r, int c) {
        if (r < 0 || r >= height || c < 0 || c >= width) {
            return false;
        }
        return ink[static_cast<std::size_t>(r) * width + c] != 0;
    };

    EdgeGrid grid;
    grid.width = width;
    grid.height = height;
    grid.present.assign(static_cast<std::size_t>(width + 1) * (height + 1) * 4, 0);
    grid.used.assign(grid.present.size(), 0);

    // Exposed pixel sides become directed lattice edges with ink on the left.
    for (int r = 0; r < height; ++r) {
        for (int c = 0; c < width; ++c) {
            if (!is_ink(r, c)) {
                continue;
            }
            if (!is_ink(r - 1, c)) {
                grid.present[grid.index(c + 1, r, 1)] = 1; // top side, walking W
            }
            if (!is_ink(r + 1, c)) {
                grid.present[grid.index(c, r + 1, 0)] = 1; // bottom side, walking E
            }
            if (!is_ink(r, c - 1)) {
                grid.present[grid.index(c, r, 2)] = 1; // left side, walking S
            }
            if (!is_ink(r, c + 1)) {
                grid.present[grid.index(c + 1, r + 1, 3)] = 1; // right side, walking N
            }
        }
    }

    std::vector<std::vector<Point>> contours;
    for (std::size_t start = 0; start < grid.present.size(); ++start) {
        if (!grid.present[start] || grid.used[start]) {
            continue;
        }
        std::vector<Point> contour;
        std::size_t edge = start;
        int x = static_cast<int>((edge / 4) % (width + 1));
        int y = static_cast<int>((edge / 4) / (width + 1));
        int dir = static_cast<int>(edge % 4);
        while (true) {
            grid.used[edge] = 1;
            contour.push_back({static_cast<double>(x), static_cast<double>(y)});
            x += kDx[dir];
            y += kDy[dir];
            // Prefer the left turn so diagonally touching ink stays separate.
            // The successor is chosen among present edges regardless of use;
            // hitting a used edge means the loop has closed on its start.
            const int candidates[3] = {left_turn_of(dir), dir, right_turn_of(dir)};
            std::size_t next_edge = grid.present.size();
            for (int next_dir : candidates) {
                const std::size_t probe = grid.index(x, y, next_dir);
                if (grid.present[probe]) {
                    next_edge = probe;
                    dir = next_dir;
                    break;
                }
            }
            if (next_edge == grid.present.size() || grid.used[next_edge]) {
                break;
            }
            edge = next_edge;
        }
        contours.push_back(std::move(contour));
    }
    return contours;
}

std::vector<std::size_t> simplify_closed(const std::vector<Point>& points, double tolerance) {
    const std::size_t n = points.size();
    if (n < 4) {
        std::vector<std::size_t> all(n);
        for (std::size_t i = 0; i < n; ++i) {
            all[i] = i;
        }
        return all;
    }
    // Anchor the reduction at point 0 and the point farthest from it, then
    // reduce the two open halves independently.
    std::size_t far_index = 1;
    double far_dist = -1.0;
    for (std::size_t i = 1; i < n; ++i) {
        const double dx = points[i].x - points[0].x;
        const double dy = points[i].y - points[0].y;
        const double d = dx * dx + dy * dy;
        if (d > far_dist) {
            far_dist = d;
            far_index = i;
        }
    }
    std::vector<Point> wrapped = points;
    wrapped.push_back(points[0]);
    std::vector<std::size_t> keep;
    keep.push_back(0);
    douglas_peucker(wrapped, 0, far_index, tolerance, keep);
    keep.push_back(far_index);
    douglas_peucker(wrapped, far_index, n, tolerance, keep);
    // Indices in the second half may include none beyond far_index; entries
    // are already in ascending order and exclude the wrapped duplicate of 0.
    return keep;
}

PathModel trace_bitmap_sized(const std::vector<std::uint8_t>& grid, int width, int height,
                             int threshold) {
    if (threshold <= 0 || threshold >= 255) {
        throw std::invalid_argument("trace_bitmap: threshold must be inside (0, 255)");
    }
    std::vector<std::uint8_t> ink(grid.size(), 0);
    bool any = false;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] >= threshold) {
            ink[i] = 1;
            any = true;
        }
    }
    if (!any) {
        throw std::runtime_error("trace_bitmap: nothing to trace");
    }

    PathModel model;
    for (const std::vector<Point>& contour : extract_contours(ink, width, height)) {
        if (contour.size() < 3) {
            continue;
        }
        const std::vector<std::size_t> corners = simplify_closed(contour, kSimplifyTolerance);
        Subpath sub;
        sub.segments = fit_contour(contour, corners, kFitTolerance);
        if (!sub.segments.empty()) {
            model.subpaths.push_back(std::move(sub));
        }
    }
    validate(model);
    return model;
}

PathModel trace_bitmap(const std::array<std::uint8_t, kGridPixels>& grid, int threshold) {
    return trace_bitmap_sized(std::vector<std::uint8_t>(grid.begin(), grid.end()), kGridSide,
                              kGridSide, threshold);
}

} // namespace metisforge::digit
