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

#ifndef METISFORGE_SEARCH_ENGINE_HPP
#define METISFORGE_SEARCH_ENGINE_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "metisforge/common/rng.hpp"
#include "metisforge/fitness/objectives.hpp"
#include "metisforge/harness/mutation.hpp"
#include "metisforge/search/archive.hpp"
#include "metisforge/search/individual.hpp"
#include "metisforge/search/nsga2.hpp"

namespace metisforge::search {

struct SearchConfig {
    int popsize = 24;
    int g_max = 50;
    int repop_upper_bound = 10;
    std::uint64_t rng_seed = 0;
};

inline void validate(const SearchConfig& cfg) {
    if (cfg.popsize < 2) {
        throw std::invalid_argument("search config: popsize must be at least 2");
    }
    if (cfg.g_max < 0) {
        throw std::invalid_argument("search config: g_max must be nonnegative");
    }
    if (cfg.repop_upper_bound < 1 || cfg.repop_upper_bound > cfg.popsize) {
        throw std::invalid_argument(
            "search config: repop_upper_bound must lie in [1, popsize]");
    }
}

// One entry of the starting corpus: a named genotype the search may restart
// from. For digits these are traced corpus files; for the regression domain,
// pre-sampled chromosomes.
template <typename Domain>
struct SeedEntry {
    std::string id;
    typename Domain::Genotype genotype{};
};

// Per-generation progress line: generation 0 describes the state right after
// initialization. best_f1 is the minimum (f1 is minimized) over the selected
// population.
struct GenerationRecord {
    int generation = 0;
    double best_f1 = 0.0;
    double mean_f1 = 0.0;
    std::size_t archive_size = 0;
};

template <typename Domain>
struct SearchResult {
    Archive<Domain> archive;
    std::vector<GenerationRecord> log;
};

// The evolutionary core: NSGA-II selection over (misbehaviour closeness,
// sparseness), an external archive of solution niches, and periodic
// repopulation from the seed corpus. Every random draw flows through one run
// RNG in a fixed order, so identical (config, seed, corpus, instances) give
// identical archives.
//
// Domain requirements: types Genotype/Phenotype; express(genotype),
// mutate_genotype(genotype, rng), evaluate(phenotype, model) -> EvalOutcome,
// phenotype_hash(phenotype), and distance(a, b) over anything carrying the
// domain's genotype/phenotype fields.
template <typename Domain>
class SearchEngine {
public:
    using Ind = Individual<Domain>;

    SearchEngine(Domain domain, SearchConfig cfg, ArchivePolicy policy, double t_a,
                 const harness::ModelInstanceSet& originals,
                 const harness::ModelInstanceSet& mutants,
                 std::vector<SeedEntry<Domain>> seeds)
        : domain_(std::move(domain)),
          cfg_(cfg),
          archive_(policy, t_a),
          originals_(originals),
          mutants_(mutants),
          seeds_(std::move(seeds)),
          rng_(cfg.rng_seed) {
        validate(cfg_);
        if (seeds_.empty()) {
            throw std::invalid_argument("search: empty seed corpus");
        }
        if (originals_.instances.empty() || mutants_.instances.empty()) {
            throw std::invalid_argument("search: need trained original and mutant instances");
        }
    }

    SearchResult<Domain> run() {
        prepare_seed_pool();
        std::vector<Ind> population = init_population();
        evaluate_all(population);
        archive_.update(population, domain_);
        population = environmental_select(std::move(population),
                                          static_cast<std::size_t>(cfg_.popsize));
        log_.push_back(describe(0, population));

        for (int g = 1; g <= cfg_.g_max; ++g) {
            std::vector<Ind> offspring =
                sel_tour_dcd(population, static_cast<std::size_t>(cfg_.popsize), rng_);
            repopulate(population);
            for (Ind& q : offspring) {
                rebirth(q, domain_.mutate_genotype(q.genotype, rng_), q.seed_origin);
            }
            std::vector<Ind> merged = std::move(population);
            merged.insert(merged.end(), std::make_move_iterator(offspring.begin()),
                          std::make_move_iterator(offspring.end()));
            evaluate_all(merged);
            archive_.update(merged, domain_);
            population = environmental_select(std::move(merged),
                                              static_cast<std::size_t>(cfg_.popsize));
            log_.push_back(describe(g, population));
        }
        return {archive_, log_};
    }

private:
    // A seed with its expressed phenotype and behaviour on the originals.
    struct SeedState {
        std::size_t index = 0; // into seeds_
        typename Domain::Genotype genotype{};
        typename Domain::Phenotype phenotype{};
        bool correct_on_all_originals = false;
    };

    void prepare_seed_pool() {
        seed_states_.clear();
        correct_seed_positions_.clear();
        for (std::size_t i = 0; i < seeds_.size(); ++i) {
            SeedState state;
            state.index = i;
            state.genotype = seeds_[i].genotype;
            state.phenotype = domain_.express(state.genotype);
            state.correct_on_all_originals = true;
            for (const harness::TinyModel& model : originals_.instances) {
                if (!memoized_eval(state.phenotype, model).correct) {
                    state.correct_on_all_originals = false;
                    break;
                }
            }
            if (state.correct_on_all_originals) {
                correct_seed_positions_.push_back(seed_states_.size());
            }
            seed_states_.push_back(std::move(state));
        }
        if (correct_seed_positions_.size() < static_cast<std::size_t>(cfg_.popsize)) {
            throw std::runtime_error(
                "init_population: only " + std::to_string(correct_seed_positions_.size()) +
                " of " + std::to_string(seeds_.size()) +
                " seeds behave correctly on every original instance; need " +
                std::to_string(cfg_.popsize));
        }
    }

    double seed_distance(std::size_t a, std::size_t b) const {
        return domain_.distance(seed_states_[a], seed_states_[b]);
    }

    // Greedy farthest-point ordering over the correct seeds: the first pick
    // is uniform, each later pick maximizes the distance to the nearest
    // already-picked seed, ties broken by the lexicographically lowest seed
    // id. Exactly popsize picks are made.
    std::vector<std::size_t> spread_seed_picks() {
        const std::size_t want = static_cast<std::size_t>(cfg_.popsize);
        std::vector<std::size_t> remaining = correct_seed_positions_;
        std::vector<std::size_t> picks;
        picks.reserve(want);

        const std::size_t first = rng_.uniform_index(remaining.size());
        picks.push_back(remaining[first]);
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(first));

        std::vector<double> nearest(remaining.size(),
                                    std::numeric_limits<double>::infinity());
        while (picks.size() < want) {
            for (std::size_t i = 0; i < remaining.size(); ++i) {
                nearest[i] = std::min(nearest[i], seed_distance(remaining[i], picks.back()));
            }
            std::size_t best = 0;
            for (std::size_t i = 1; i < remaining.size(); ++i) {
                if (nearest[i] > nearest[best] ||
                    (nearest[i] == nearest[best] &&
                     seeds_[seed_states_[remaining[i]].index].id <
                         seeds_[seed_states_[remaining[best]].index].id)) {
                    best = i;
                }
            }
            picks.push_back(remaining[best]);
            remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
            nearest.erase(nearest.begin() + static_cast<std::ptrdiff_t>(best));
        }
        return picks;
    }

    std::vector<Ind> init_population() {
        std::vector<Ind> population;
        population.reserve(static_cast<std::size_t>(cfg_.popsize));
        for (std::size_t pos : spread_seed_picks()) {
            const SeedState& seed = seed_states_[pos];
            Ind ind;
            rebirth(ind, domain_.mutate_genotype(seed.genotype, rng_),
                    seeds_[seed.index].id);
            population.push_back(std::move(ind));
        }
        return population;
    }

    // Installs a new genotype into `ind` under a fresh id, re-expresses the
    // phenotype, and clears everything evaluation-dependent.
    void rebirth(Ind& ind, typename Domain::Genotype genotype, std::string seed_origin) {
        ind.id = next_id_++;
        ind.genotype = std::move(genotype);
        ind.phenotype = domain_.express(ind.genotype);
        ind.seed_origin = std::move(seed_origin);
        ind.fitness = fitness::FitnessPair{};
        ind.original_outcomes.clear();
        ind.mutant_outcomes.clear();
        ind.evaluated = false;
        ind.rank = -1;
        ind.crowding = 0.0;
    }

    fitness::EvalOutcome memoized_eval(const typename Domain::Phenotype& phenotype,
                                       const harness::TinyModel& model) {
        const std::pair<std::uint64_t, std::uint64_t> key{
            model.fingerprint(), domain_.phenotype_hash(phenotype)};
        const auto it = eval_memo_.find(key);
        if (it != eval_memo_.end()) {
            return it->second;
        }
        const fitness::EvalOutcome outcome = domain_.evaluate(phenotype, model);
        eval_memo_.emplace(key, outcome);
        return outcome;
    }

    // Model-behaviour objectives are cached per genotype; sparseness is
    // recomputed for everyone against the archive as it stands, since any
    // archive change moves it.
    void evaluate_all(std::vector<Ind>& population) {
        for (Ind& ind : population) {
            if (!ind.evaluated) {
                ind.original_outcomes.clear();
                ind.mutant_outcomes.clear();
                for (const harness::TinyModel& model : originals_.instances) {
                    ind.original_outcomes.push_back(memoized_eval(ind.phenotype, model));
                }
                for (const harness::TinyModel& model : mutants_.instances) {
                    ind.mutant_outcomes.push_back(memoized_eval(ind.phenotype, model));
                }
                ind.fitness.f1 = fitness::fitness_f1(ind.mutant_outcomes);
                ind.evaluated = true;
            }
            ind.fitness.f2 = fitness::fitness_f2(archive_.distances_to(ind, domain_));
        }
    }

    // Replaces (a) every member misbehaving on all original instances, then
    // (b) the r most-dominated of the untouched remainder, r uniform in
    // [1, repop_upper_bound]; each replacement is a once-mutated random
    // correct seed. Skipped entirely while the archive is empty.
    void repopulate(std::vector<Ind>& population) {
        if (archive_.empty()) {
            return;
        }
        std::vector<bool> replaced(population.size(), false);
        for (std::size_t i = 0; i < population.size(); ++i) {
            if (population[i].misbehaves_on_all_originals()) {
                replace_with_fresh(population[i]);
                replaced[i] = true;
            }
        }
        const int r = static_cast<int>(rng_.uniform_int(1, cfg_.repop_upper_bound));
        std::vector<std::size_t> remaining;
        for (std::size_t i = 0; i < population.size(); ++i) {
            if (!replaced[i]) {
                remaining.push_back(i);
            }
        }
        std::sort(remaining.begin(), remaining.end(), [&](std::size_t a, std::size_t b) {
            if (population[a].rank != population[b].rank) {
                return population[a].rank > population[b].rank;
            }
            if (population[a].crowding != population[b].crowding) {
                return population[a].crowding < population[b].crowding;
            }
            return population[a].id < population[b].id;
        });
        const std::size_t doomed =
            std::min(static_cast<std::size_t>(r), remaining.size());
        for (std::size_t k = 0; k < doomed; ++k) {
            replace_with_fresh(population[remaining[k]]);
        }
    }

    void replace_with_fresh(Ind& ind) {
        const std::size_t pick = rng_.uniform_index(correct_seed_positions_.size());
        const SeedState& seed = seed_states_[correct_seed_positions_[pick]];
        rebirth(ind, domain_.mutate_genotype(seed.genotype, rng_), seeds_[seed.index].id);
    }

    GenerationRecord describe(int generation, const std::vector<Ind>& population) const {
        GenerationRecord record;
        record.generation = generation;
        record.archive_size = archive_.size();
        record.best_f1 = population.front().fitness.f1;
        double total = 0.0;
        for (const Ind& ind : population) {
            record.best_f1 = std::min(record.best_f1, ind.fitness.f1);
            total += ind.fitness.f1;
        }
        record.mean_f1 = total / static_cast<double>(population.size());
        return record;
    }

    Domain domain_;
    SearchConfig cfg_;
    Archive<Domain> archive_;
    const harness::ModelInstanceSet& originals_;
    const harness::ModelInstanceSet& mutants_;
    std::vector<SeedEntry<Domain>> seeds_;
    Rng rng_;
    std::uint64_t next_id_ = 0;
    std::vector<SeedState> seed_states_;
    std::vector<std::size_t> correct_seed_positions_;
    std::map<std::pair<std::uint64_t, std::uint64_t>, fitness::EvalOutcome> eval_memo_;
    std::vector<GenerationRecord> log_;
};

// Convenience wrapper running one full search.
template <typename Domain>
SearchResult<Domain> run_search(Domain domain, const SearchConfig& cfg, ArchivePolicy policy,
                                double t_a, const harness::ModelInstanceSet& originals,
                                const harness::ModelInstanceSet& mutants,
                                std::vector<SeedEntry<Domain>> seeds) {
    SearchEngine<Domain> engine(std::move(domain), cfg, policy, t_a, originals, mutants,
                                std::move(seeds));
    return engine.run();
}

} // namespace metisforge::search

#endif // METISFORGE_SEARCH_ENGINE_HPP
