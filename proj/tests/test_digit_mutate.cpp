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

#include "metisforge/digit/mutate.hpp"

#include <cmath>
#include <cstddef>
#include <set>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "metisforge/common/rng.hpp"
#include "metisforge/digit/path_model.hpp"
#include "test_support.hpp"

namespace metisforge::digit {
namespace {

using test::rect_path;

// Flat indices whose stored coordinates differ between the two models.
std::vector<std::size_t> changed_points(const PathModel& before, const PathModel& after) {
    std::vector<std::size_t> changed;
    for (std::size_t i = 0; i < point_count(before); ++i) {
        const Point a = get_point(before, point_ref_at(before, i));
        const Point b = get_point(after, point_ref_at(after, i));
        if (a.x != b.x || a.y != b.y) {
            changed.push_back(i);
        }
    }
    return changed;
}

TEST(MutateDigit, MovesExactlyOneAddressablePointAlongOneAxis) {
    const PathModel rect = rect_path(8, 8, 20, 20);
    const MutationExtent extent{1.0, 3.0};
    Rng rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const PathModel mutated = mutate_digit(rect, extent, rng);
        ASSERT_NO_THROW(validate(mutated));
        const std::vector<std::size_t> changed = changed_points(rect, mutated);
        // A junction move shows up at one flat index; the paired stored copy
        // (previous segment's end) is not separately addressable, so exactly
        // one index may change.
        ASSERT_EQ(changed.size(), 1u) << "trial " << trial;
        const Point before = get_point(rect, point_ref_at(rect, changed[0]));
        const Point after = get_point(mutated, point_ref_at(mutated, changed[0]));
        const double dx = after.x - before.x;
        const double dy = after.y - before.y;
        EXPECT_TRUE(dx == 0.0 || dy == 0.0) << "diagonal move in trial " << trial;
        const double magnitude = std::abs(dx) + std::abs(dy);
        // Interior points move the full drawn magnitude; the canvas clamp can
        // only shorten it.
        EXPECT_GT(magnitude, 0.0);
        EXPECT_LE(magnitude, extent.hi);
    }
}

TEST(MutateDigit, FixedExtentPinsTheDisplacementMagnitude) {
    // A rectangle far from the canvas edge cannot trigger clamping for a
    // 2-unit move, so the magnitude must be exactly extent.lo == extent.hi.
    const PathModel rect = rect_path(8, 8, 20, 20);
    const MutationExtent extent{2.0, 2.0};
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const PathModel mutated = mutate_digit(rect, extent, rng);
        const std::vector<std::size_t> changed = changed_points(rect, mutated);
        ASSERT_EQ(changed.size(), 1u);
        const Point before = get_point(rect, point_ref_at(rect, changed[0]));
        const Point after = get_point(mutated, point_ref_at(mutated, changed[0]));
        const double magnitude = std::abs(after.x - before.x) + std::abs(after.y - before.y);
        EXPECT_DOUBLE_EQ(magnitude, 2.0);
    }
}

TEST(MutateDigit, ClampsDisplacementsAtTheCanvasEdge) {
    // Every point of this sliver sits within 1 unit of the left edge; a 5-unit
    // move toward it must stop at x == 0.
    const PathModel sliver = rect_path(0.5, 10, 1.0, 14);
    const MutationExtent extent{5.0, 5.0};
    Rng rng(11);
    bool saw_clamp = false;
    for (int trial = 0; trial < 300 && !saw_clamp; ++trial) {
        const PathModel mutated = mutate_digit(sliver, extent, rng);
        for (std::size_t i = 0; i < point_count(mutated); ++i) {
            const Point p = get_point(mutated, point_ref_at(mutated, i));
            EXPECT_GE(p.x, 0.0);
            EXPECT_LE(p.x, kCanvasSize);
            EXPECT_GE(p.y, 0.0);
            EXPECT_LE(p.y, kCanvasSize);
            if (p.x == 0.0) {
                saw_clamp = true;
            }
        }
    }
    EXPECT_TRUE(saw_clamp);
}

TEST(MutateDigit, DeterministicForIdenticalRngState) {
    const PathModel rect = rect_path(8, 8, 20, 20);
    const MutationExtent extent{1.0, 3.0};
    Rng rng_a(2026);
    Rng rng_b(2026);
    for (int trial = 0; trial < 20; ++trial) {
        const PathModel a = mutate_digit(rect, extent, rng_a);
        const PathModel b = mutate_digit(rect, extent, rng_b);
        for (std::size_t i = 0; i < point_count(a); ++i) {
            const Point pa = get_point(a, point_ref_at(a, i));
            const Point pb = get_point(b, point_ref_at(b, i));
            EXPECT_EQ(pa.x, pb.x);
            EXPECT_EQ(pa.y, pb.y);
        }
    }
}

TEST(MutateDigit, EventuallyTouchesMostPoints) {
    const PathModel rect = rect_path(8, 8, 20, 20);
    const MutationExtent extent{1.0, 3.0};
    Rng rng(5);
    std::set<std::size_t> touched;
    for (int trial = 0; trial < 600; ++trial) {
        const PathModel mutated = mutate_digit(rect, extent, rng);
        for (std::size_t i : changed_points(rect, mutated)) {
            touched.insert(i);
        }
    }
    // 12 addressable points; a uniform picker has to reach nearly all of them.
    EXPECT_GE(touched.size(), 10u);
}

TEST(MutateDigit, LeavesTheInputModelUntouched) {
    const PathModel rect = rect_path(8, 8, 20, 20);
    const PathModel reference = rect_path(8, 8, 20, 20);
    const MutationExtent extent{1.0, 3.0};
    Rng rng(1);
    (void)mutate_digit(rect, extent, rng);
    EXPECT_TRUE(changed_points(reference, rect).empty());
}

TEST(MutateDigit, RejectsInvalidExtents) {
    const PathModel rect = rect_path(8, 8, 20, 20);
    Rng rng(1);
    EXPECT_THROW(mutate_digit(rect, {0.0, 1.0}, rng), std::invalid_argument);
    EXPECT_THROW(mutate_digit(rect, {-1.0, 1.0}, rng), std::invalid_argument);
    EXPECT_THROW(mutate_digit(rect, {2.0, 1.0}, rng), std::invalid_argument);
    EXPECT_NO_THROW(mutate_digit(rect, {1.0, 1.0}, rng));
}

} // namespace
} // namespace metisforge::digit
