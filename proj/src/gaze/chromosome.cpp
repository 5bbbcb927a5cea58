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

#include "metisforge/gaze/chromosome.hpp"

#include <cmath>
#include <stdexcept>

#include "metisforge/fitness/eval.hpp"

namespace metisforge::gaze {

namespace {

const std::array<const char*, kCategoryChoices>& choices_for(int categorical_index) {
    return categorical_index == 0 ? kIrisTextures : kSkinTextures;
}

const char* categorical_name(int categorical_index) {
    return categorical_index == 0 ? "iris_texture" : "skin_texture";
}

} // namespace

void validate(const EyeChromosome& c) {
    for (int j = 0; j < kNumFloatGenes; ++j) {
        const FloatGeneSpec& spec = kFloatGenes[j];
        if (!(c.floats[j] >= spec.lo && c.floats[j] <= spec.hi)) {
            throw std::invalid_argument(std::string("chromosome: gene ") + spec.name +
                                        " outside bounds");
        }
    }
    for (int j = 0; j < kNumCategoricalGenes; ++j) {
        if (c.categories[j] < 0 || c.categories[j] >= kCategoryChoices) {
            throw std::invalid_argument(std::string("chromosome: gene ") + categorical_name(j) +
                                        " outside choices");
        }
    }
}

EyeChromosome sample_chromosome(Rng& rng) {
    EyeChromosome c;
    for (int j = 0; j < kNumFloatGenes; ++j) {
        c.floats[j] = rng.uniform(kFloatGenes[j].lo, kFloatGenes[j].hi);
    }
    for (int j = 0; j < kNumCategoricalGenes; ++j) {
        c.categories[j] = static_cast<int>(rng.uniform_index(kCategoryChoices));
    }
    return c;
}

EyeChromosome mutate_chromosome(const EyeChromosome& c, Rng& rng) {
    validate(c);
    EyeChromosome mutated = c;
    const std::size_t gene = rng.uniform_index(kNumGenes);
    if (gene < kNumFloatGenes) {
        const FloatGeneSpec& spec = kFloatGenes[gene];
        const double step = 0.1 * (spec.hi - spec.lo);
        const double delta = rng.coin_flip() ? step : -step;
        mutated.floats[gene] = std::clamp(c.floats[gene] + delta, spec.lo, spec.hi);
    } else {
        const int slot = static_cast<int>(gene) - kNumFloatGenes;
        const std::size_t alt = rng.uniform_index(kCategoryChoices - 1);
        const int current = c.categories[slot];
        mutated.categories[slot] =
            static_cast<int>(alt) >= current ? static_cast<int>(alt) + 1 : static_cast<int>(alt);
    }
    return mutated;
}

double gene_distance(const EyeChromosome& a, const EyeChromosome& b) {
    const auto float_unit = [&](int j) {
        const double delta = std::abs(a.floats[j] - b.floats[j]);
        return delta / (delta + 1.0);
    };
    double total = 0.0;
    total += fitness::gaze_angle_error(a.floats[kHeadPitch], a.floats[kHeadYaw],
                                       b.floats[kHeadPitch], b.floats[kHeadYaw]);
    total += fitness::gaze_angle_error(a.floats[kEyePitch], a.floats[kEyeYaw],
                                       b.floats[kEyePitch], b.floats[kEyeYaw]);
    total += float_unit(kPupilSize);
    total += float_unit(kIrisSize);
    total += float_unit(kAmbientIntensity);
    total += float_unit(kExposure);
    total += float_unit(kLightRotation);
    total += a.categories[0] == b.categories[0] ? 0.0 : 1.0;
    total += a.categories[1] == b.categories[1] ? 0.0 : 1.0;
    return total / 9.0;
}

nlohmann::json to_json_record(const EyeChromosome& c) {
    validate(c);
    nlohmann::json record;
    for (int j = 0; j < kNumFloatGenes; ++j) {
        record[kFloatGenes[j].name] = c.floats[j];
    }
    for (int j = 0; j < kNumCategoricalGenes; ++j) {
        record[categorical_name(j)] = choices_for(j)[c.categories[j]];
    }
    return record;
}

EyeChromosome from_json_record(const nlohmann::json& record) {
    EyeChromosome c;
    for (int j = 0; j < kNumFloatGenes; ++j) {
        const char* name = kFloatGenes[j].name;
        if (!record.contains(name)) {
            throw std::invalid_argument(std::string("chromosome record: missing gene ") + name);
        }
        c.floats[j] = record.at(name).get<double>();
    }
    for (int j = 0; j < kNumCategoricalGenes; ++j) {
        const char* name = categorical_name(j);
        if (!record.contains(name)) {
            throw std::invalid_argument(std::string("chromosome record: missing gene ") + name);
        }
        const std::string choice = record.at(name).get<std::string>();
        const auto& choices = choices_for(j);
        int found = -1;
        for (int k = 0; k < kCategoryChoices; ++k) {
            if (choice == choices[k]) {
                found = k;
                break;
            }
        }
        if (found < 0) {
            throw std::invalid_argument("chromosome record: unknown choice '" + choice +
                                        "' for gene " + name);
        }
        c.categories[j] = found;
    }
    validate(c);
    return c;
}

nlohmann::json schema_json() {
    nlohmann::json schema;
    schema["schema_version"] = kSchemaVersion;
    nlohmann::json floats = nlohmann::json::array();
    for (const FloatGeneSpec& spec : kFloatGenes) {
        floats.push_back({{"name", spec.name}, {"lo", spec.lo}, {"hi", spec.hi}});
    }
    schema["float_genes"] = floats;
    nlohmann::json cats = nlohmann::json::array();
    for (int j = 0; j < kNumCategoricalGenes; ++j) {
        nlohmann::json choices = nlohmann::json::array();
        for (const char* choice : choices_for(j)) {
            choices.push_back(choice);
        }
        cats.push_back({{"name", categorical_name(j)}, {"choices", choices}});
    }
    schema["categorical_genes"] = cats;
    return schema;
}

} // namespace metisforge::gaze
