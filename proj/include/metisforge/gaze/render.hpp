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

#ifndef METISFORGE_GAZE_RENDER_HPP_
#define METISFORGE_GAZE_RENDER_HPP_

#include <array>
#include <cstdint>

#include "metisforge/gaze/chromosome.hpp"

namespace metisforge::gaze {

inline constexpr int kFeatureCount = 32;
inline constexpr double kNoiseAmplitude = 0.01;

struct FeatureVector {
    std::array<double, kFeatureCount> values{};
    double truth_pitch = 0.0;
    double truth_yaw = 0.0;
    double head_pitch = 0.0;
    double head_yaw = 0.0;
};

// Deterministic surrogate for an eye-image renderer. Each feature is a fixed
// linear mix of the normalized float genes, plus a fixed-amplitude sinusoid
// of a second fixed mix, plus a per-category embedding for each categorical
// gene, plus uniform noise of amplitude kNoiseAmplitude drawn from
// `noise_seed`. Identical (chromosome, noise_seed) pairs give identical
// vectors; the noise channel is the only seed-dependent part.
FeatureVector render_features(const EyeChromosome& c, std::uint64_t noise_seed);

// Upper bound on the L2 change of the feature vector when the given float
// gene moves by one raw unit, derived from the fixed mixing constants.
double float_gene_lipschitz_bound(int float_gene);

} // namespace metisforge::gaze

#endif // METISFORGE_GAZE_RENDER_HPP_
