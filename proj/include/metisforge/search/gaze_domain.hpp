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

#ifndef METISFORGE_SEARCH_GAZE_DOMAIN_HPP
#define METISFORGE_SEARCH_GAZE_DOMAIN_HPP

#include <cstdint>
#include <vector>

#include "metisforge/common/hash.hpp"
#include "metisforge/common/rng.hpp"
#include "metisforge/fitness/eval.hpp"
#include "metisforge/gaze/chromosome.hpp"
#include "metisforge/gaze/render.hpp"
#include "metisforge/harness/model.hpp"
#include "metisforge/search/engine.hpp"

namespace metisforge::search {

// Binds the gaze-regression domain to the engine: genotypes are eye
// chromosomes, phenotypes synthetic feature vectors, distances genotypic
// (mean per-gene distance), and the archive is distance-thresholded.
class GazeSearchDomain {
public:
    using Genotype = gaze::EyeChromosome;
    using Phenotype = gaze::FeatureVector;

    static constexpr ArchivePolicy kArchivePolicy = ArchivePolicy::distance_threshold;
    static constexpr double kDefaultArchiveThreshold = 0.55;

    // Seed for the renderer's noise channel, fixed for a whole run so
    // identical chromosomes express identical phenotypes.
    std::uint64_t noise_seed = 0;

    fitness::RegressionTolerance tolerance{};

    Phenotype express(const Genotype& g) const {
        return gaze::render_features(g, noise_seed);
    }

    Genotype mutate_genotype(const Genotype& g, Rng& rng) const {
        return gaze::mutate_chromosome(g, rng);
    }

    // Feature values followed by the head pose; the one encoding shared by
    // the shipped datasets and by model evaluation during search.
    static std::vector<double> to_model_input(const Phenotype& p) {
        std::vector<double> input(p.values.begin(), p.values.end());
        input.push_back(p.head_pitch);
        input.push_back(p.head_yaw);
        return input;
    }

    fitness::EvalOutcome evaluate(const Phenotype& p, const harness::TinyModel& model) const {
        const std::vector<double> prediction = model.predict(to_model_input(p));
        return fitness::eval_regressor(prediction[0], prediction[1], p.truth_pitch,
                                       p.truth_yaw, tolerance);
    }

    std::uint64_t phenotype_hash(const Phenotype& p) const {
        return Fnv1a()
            .span_f64(p.values)
            .f64(p.truth_pitch)
            .f64(p.truth_yaw)
            .f64(p.head_pitch)
            .f64(p.head_yaw)
            .value();
    }

    template <typename IndLike>
    double distance(const IndLike& a, const IndLike& b) const {
        return gaze::gene_distance(a.genotype, b.genotype);
    }
};

} // namespace metisforge::search

#endif // METISFORGE_SEARCH_GAZE_DOMAIN_HPP
