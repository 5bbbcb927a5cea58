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

#ifndef METISFORGE_GAZE_CHROMOSOME_HPP_
#define METISFORGE_GAZE_CHROMOSOME_HPP_

#include <array>
#include <string>

#include "metisforge/common/rng.hpp"

#include "json.hpp"

namespace metisforge::gaze {

inline constexpr int kSchemaVersion = 1;
inline constexpr int kNumFloatGenes = 9;
inline constexpr int kNumCategoricalGenes = 2;
inline constexpr int kNumGenes = kNumFloatGenes + kNumCategoricalGenes;
inline constexpr int kCategoryChoices = 5;

// Indices into EyeChromosome::floats.
enum FloatGene : int {
    kHeadPitch = 0,
    kHeadYaw = 1,
    kEyePitch = 2,
    kEyeYaw = 3,
    kPupilSize = 4,
    kIrisSize = 5,
    kAmbientIntensity = 6,
    kExposure = 7,
    kLightRotation = 8,
};

struct FloatGeneSpec {
    const char* name;
    double lo;
    double hi;
};

// Gene bounds; the head/eye angle bounds keep any two in-bounds gaze vectors
// within 1 radian of each other, so pair distances never exceed 1.
inline constexpr std::array<FloatGeneSpec, kNumFloatGenes> kFloatGenes = {{
    {"head_pitch", -0.3, 0.3},
    {"head_yaw", -0.3, 0.3},
    {"eye_pitch", -0.3, 0.3},
    {"eye_yaw", -0.3, 0.3},
    {"pupil_size", 0.2, 0.8},
    {"iris_size", 0.8, 1.2},
    {"ambient_intensity", 0.2, 1.0},
    {"exposure", 0.5, 1.5},
    {"light_rotation", -3.141592653589793, 3.141592653589793},
}};

inline constexpr std::array<const char*, kCategoryChoices> kIrisTextures = {
    "amber", "blue", "brown", "green", "grey"};
inline constexpr std::array<const char*, kCategoryChoices> kSkinTextures = {
    "pale", "fair", "tan", "olive", "deep"};

struct EyeChromosome {
    std::array<double, kNumFloatGenes> floats{};
    std::array<int, kNumCategoricalGenes> categories{}; // iris_texture, skin_texture

    bool operator==(const EyeChromosome&) const = default;
};

// Throws std::invalid_argument when a gene is outside its schema bounds.
void validate(const EyeChromosome& c);

// Every float gene uniform within bounds, categoricals uniform over choices.
EyeChromosome sample_chromosome(Rng& rng);

// Copy with exactly one gene mutated: float genes step by 10% of their range
// in a coin-flipped direction (clamped to bounds); categorical genes resample
// uniformly among the other categories.
EyeChromosome mutate_chromosome(const EyeChromosome& c, Rng& rng);

// Mean over nine per-gene distances: the head and eye angle pairs contribute
// their 3D gaze-vector angle, plain floats contribute |delta|/(|delta|+1),
// categoricals contribute 0 or 1. Always in [0, 1].
double gene_distance(const EyeChromosome& a, const EyeChromosome& b);

// Flat gene-name -> value record; categorical genes serialize as choice names.
nlohmann::json to_json_record(const EyeChromosome& c);
EyeChromosome from_json_record(const nlohmann::json& record);

// The gene schema (bounds and categories) as a versioned JSON document.
nlohmann::json schema_json();

} // namespace metisforge::gaze

#endif // METISFORGE_GAZE_CHROMOSOME_HPP_
