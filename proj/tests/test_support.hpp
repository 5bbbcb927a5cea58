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

#ifndef METISFORGE_TESTS_TEST_SUPPORT_HPP
#define METISFORGE_TESTS_TEST_SUPPORT_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "metisforge/common/rng.hpp"
#include "metisforge/digit/path_model.hpp"
#include "metisforge/harness/dataset.hpp"

namespace metisforge::test {

// Scratch directory under the system temp root, removed on destruction.
class TempDir {
  public:
    explicit TempDir(const std::string& tag) {
        path_ = std::filesystem::temp_directory_path() /
                ("metisforge_" + tag + "_" + std::to_string(counter_++));
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

  private:
    static inline int counter_ = 0;
    std::filesystem::path path_;
};

// Axis-aligned rectangle as a closed path of four straight cubic segments
// (control points on the chords).
inline digit::PathModel rect_path(double x0, double y0, double x1, double y1) {
    const auto line = [](digit::Point a, digit::Point b) {
        const auto lerp = [&](double t) {
            return digit::Point{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
        };
        return digit::CubicSegment{a, lerp(1.0 / 3.0), lerp(2.0 / 3.0), b};
    };
    const digit::Point p00{x0, y0};
    const digit::Point p10{x1, y0};
    const digit::Point p11{x1, y1};
    const digit::Point p01{x0, y1};
    digit::PathModel model;
    model.subpaths.push_back({{line(p00, p10), line(p10, p11), line(p11, p01), line(p01, p00)}});
    return model;
}

// Circle approximated by four quarter-turn cubic segments.
inline digit::PathModel circle_path(double cx, double cy, double r) {
    const double k = 0.5522847498307936 * r;
    const digit::Point e{cx + r, cy};
    const digit::Point s{cx, cy + r};
    const digit::Point w{cx - r, cy};
    const digit::Point n{cx, cy - r};
    digit::PathModel model;
    model.subpaths.push_back({{
        {e, {cx + r, cy + k}, {cx + k, cy + r}, s},
        {s, {cx - k, cy + r}, {cx - r, cy + k}, w},
        {w, {cx - r, cy - k}, {cx - k, cy - r}, n},
        {n, {cx + k, cy - r}, {cx + r, cy - k}, e},
    }});
    return model;
}

// Small separable classification set: `classes` clusters in `dim` dimensions,
// one axis-aligned unit offset per class plus mild deterministic jitter.
inline harness::Dataset tiny_classification_dataset(int classes, int dim, int train_per_class,
                                                    int test_per_class,
                                                    std::uint64_t seed = 9001) {
    harness::Dataset ds;
    ds.task = harness::Task::classification;
    ds.input_dim = dim;
    ds.num_classes = classes;
    Rng rng(seed);
    const auto emit = [&](harness::DataSplit& split, int label) {
        std::vector<double> row(static_cast<std::size_t>(dim), 0.0);
        for (int f = 0; f < dim; ++f) {
            row[static_cast<std::size_t>(f)] = rng.uniform(-0.25, 0.25);
        }
        row[static_cast<std::size_t>(label % dim)] += 2.0;
        split.inputs.push_back(std::move(row));
        split.labels.push_back(label);
    };
    for (int c = 0; c < classes; ++c) {
        for (int i = 0; i < train_per_class; ++i) {
            emit(ds.train, c);
        }
        for (int i = 0; i < test_per_class; ++i) {
            emit(ds.test, c);
        }
    }
    validate(ds);
    return ds;
}

} // namespace metisforge::test

#endif // METISFORGE_TESTS_TEST_SUPPORT_HPP
