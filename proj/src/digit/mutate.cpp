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

#include <stdexcept>

namespace metisforge::digit {

PathModel mutate_digit(const PathModel& model, const MutationExtent& extent, Rng& rng) {
    if (!(extent.lo > 0.0) || extent.lo > extent.hi) {
        throw std::invalid_argument("mutate_digit: extent must satisfy 0 < lo <= hi");
    }
    validate(model);
    PathModel mutated = model;
    const std::size_t total = point_count(mutated);
    const PointRef ref = point_ref_at(mutated, rng.uniform_index(total));
    const std::uint64_t direction = rng.uniform_index(4);
    const double magnitude = rng.uniform(extent.lo, extent.hi);
    double dx = 0.0;
    double dy = 0.0;
    switch (direction) {
    case 0:
        dx = magnitude;
        break;
    case 1:
        dx = -magnitude;
        break;
    case 2:
        dy = magnitude;
        break;
    default:
        dy = -magnitude;
        break;
    }
    displace_point(mutated, ref, dx, dy);
    return mutated;
}

} // namespace metisforge::digit
