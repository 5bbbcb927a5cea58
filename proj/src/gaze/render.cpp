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

#include "metisforge/gaze/render.hpp"

#include <cmath>

namespace metisforge::gaze {

namespace {

// All mixing constants are generated once from this fixed key, so the
// surrogate renderer is a pinned deterministic function of its inputs.
constexpr std::uint64_t kMixingKey = 0x6d65746973666f31ULL;

struct MixingConstants {
    // Linear weights over the normalized float genes.
    double linear[kFeatureCount][kNumFloatGenes];
    // Sinusoidal channel: amplitude * sin(frequency * <mix, genes> + phase).
    double amplitude[kFeatureCount];
    double frequency[kFeatureCount];
    double phase[kFeatureCount];
    double sin_mix[kFeatureCount][kNumFloatGenes];
    // Embedding tables for the two categorical genes.
    double iris_embed[kCategoryChoices][kFeatureCount];
    double skin_embed[kCategoryChoices][kFeatureCount];
};

const MixingConstants& mixing() {
    static const MixingConstants constants = [] {
        MixingConstants m;
        Rng rng(kMixingKey);
        for (int i = 0; i < kFeatureCount; ++i) {
            for (int j = 0; j < kNumFloatGenes; ++j) {
                m.linear[i][j] = rng.uniform(-1.0, 1.0);
            }
        }
        for (int i = 0; i < kFeatureCount; ++i) {
            m.amplitude[i] = rng.uniform(0.2, 0.5);
        }
        for (int i = 0; i < kFeatureCount; ++i) {
            m.frequency[i] = rng.uniform(0.5, 2.0);
        }
        for (int i = 0; i < kFeatureCount; ++i) {
            m.phase[i] = rng.uniform(0.0, 2.0 * 3.141592653589793);
        }
        for (int i = 0; i < kFeatureCount; ++i) {
            for (int j = 0; j < kNumFloatGenes; ++j) {
                m.sin_mix[i][j] = rng.uniform(-1.0, 1.0);
            }
        }
        for (int k = 0; k < kCategoryChoices; ++k) {
            for (int i = 0; i < kFeatureCount; ++i) {
                m.iris_embed[k][i] = rng.uniform(-0.5, 0.5);
            }
        }
        for (int k = 0; k < kCategoryChoices; ++k) {
            for (int i = 0; i < kFeatureCount; ++i) {
                m.skin_embed[k][i] = rng.uniform(-0.5, 0.5);
            }
        }
        return m;
    }();
    return constants;
}

double normalized_gene(const EyeChromosome& c, int j) {
    const FloatGeneSpec& spec = kFloatGenes[j];
    return (c.floats[j] - spec.lo) / (spec.hi - spec.lo);
}

} // namespace

FeatureVector render_features(const EyeChromosome& c, std::uint64_t noise_seed) {
    validate(c);
    const MixingConstants& m = mixing();

    double genes[kNumFloatGenes];
    for (int j = 0; j < kNumFloatGenes; ++j) {
        genes[j] = normalized_gene(c, j);
    }

    FeatureVector out;
    out.truth_pitch = c.floats[kEyePitch];
    out.truth_yaw = c.floats[kEyeYaw];
    out.head_pitch = c.floats[kHeadPitch];
    out.head_yaw = c.floats[kHeadYaw];

    Rng noise(noise_seed);
    for (int i = 0; i < kFeatureCount; ++i) {
        double linear = 0.0;
        double mixed = 0.0;
        for (int j = 0; j < kNumFloatGenes; ++j) {
            linear += m.linear[i][j] * genes[j];
            mixed += m.sin_mix[i][j] * genes[j];
        }
        double value = linear + m.amplitude[i] * std::sin(m.frequency[i] * mixed + m.phase[i]);
        value += m.iris_embed[c.categories[0]][i];
        value += m.skin_embed[c.categories[1]][i];
        value += noise.uniform(-kNoiseAmplitude, kNoiseAmplitude);
        out.values[i] = value;
    }
    return out;
}

double float_gene_lipschitz_bound(int float_gene) {
    const MixingConstants& m = mixing();
    const FloatGeneSpec& spec = kFloatGenes[float_gene];
    double sum_sq = 0.0;
    for (int i = 0; i < kFeatureCount; ++i) {
        const double per_feature = std::abs(m.linear[i][float_gene]) +
                                   m.amplitude[i] * m.frequency[i] *
                                       std::abs(m.sin_mix[i][float_gene]);
        sum_sq += per_feature * per_feature;
    }
    return std::sqrt(sum_sq) / (spec.hi - spec.lo);
}

} // namespace metisforge::gaze
