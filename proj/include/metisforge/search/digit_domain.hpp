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

#ifndef METISFORGE_SEARCH_DIGIT_DOMAIN_HPP
#define METISFORGE_SEARCH_DIGIT_DOMAIN_HPP

#include <cstdint>
#include <vector>

#include "metisforge/common/hash.hpp"
#include "metisforge/common/rng.hpp"
#include "metisforge/digit/mutate.hpp"
#include "metisforge/digit/path_model.hpp"
#include "metisforge/digit/rasterize.hpp"
#include "metisforge/fitness/eval.hpp"
#include "metisforge/fitness/objectives.hpp"
#include "metisforge/harness/model.hpp"
#include "metisforge/search/engine.hpp"

namespace metisforge::search {

// Editable digit representation: the curve model plus the label the digit is
// supposed to read as (labels are inherited from the seed, never mutated).
struct DigitGenotype {
    digit::PathModel model;
    int label = 0;
};

// Binds the digit domain to the engine: genotypes are curve models,
// phenotypes rasterized 28x28 grids, distances are Euclidean in pixel space,
// and the archive keeps one slot per originating seed.
class DigitSearchDomain {
public:
    using Genotype = DigitGenotype;
    using Phenotype = digit::DigitInput;

    static constexpr ArchivePolicy kArchivePolicy = ArchivePolicy::per_seed;

    digit::MutationExtent extent{};

    Phenotype express(const Genotype& g) const {
        return digit::rasterize_labeled(g.model, g.label);
    }

    Genotype mutate_genotype(const Genotype& g, Rng& rng) const {
        return {digit::mutate_digit(g.model, extent, rng), g.label};
    }

    // Pixel intensities scaled to [0, 1]; the one encoding shared by the
    // shipped datasets and by model evaluation during search.
    static std::vector<double> to_model_input(const Phenotype& p) {
        std::vector<double> input;
        input.reserve(p.grid.size());
        for (std::uint8_t v : p.grid) {
            input.push_back(static_cast<double>(v) / 255.0);
        }
        return input;
    }

    fitness::EvalOutcome evaluate(const Phenotype& p, const harness::TinyModel& model) const {
        return fitness::eval_classifier(model.predict(to_model_input(p)), p.label);
    }

    std::uint64_t phenotype_hash(const Phenotype& p) const {
        return Fnv1a()
            .bytes(p.grid.data(), p.grid.size())
            .u32(static_cast<std::uint32_t>(p.label))
            .value();
    }

    template <typename IndLike>
    double distance(const IndLike& a, const IndLike& b) const {
        const std::vector<double> pa = digit::to_pixel_vector(a.phenotype);
        const std::vector<double> pb = digit::to_pixel_vector(b.phenotype);
        return fitness::pixel_distance(pa, pb);
    }
};

// Seed corpus records rewrapped for the engine.
inline std::vector<SeedEntry<DigitSearchDomain>>
digit_seed_entries(const std::vector<digit::SeedRecord>& corpus) {
    std::vector<SeedEntry<DigitSearchDomain>> entries;
    entries.reserve(corpus.size());
    for (const digit::SeedRecord& record : corpus) {
        entries.push_back({record.id, {record.model, record.label}});
    }
    return entries;
}

} // namespace metisforge::search

#endif // METISFORGE_SEARCH_DIGIT_DOMAIN_HPP
