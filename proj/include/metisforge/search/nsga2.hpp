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

#ifndef METISFORGE_SEARCH_NSGA2_HPP
#define METISFORGE_SEARCH_NSGA2_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "metisforge/common/rng.hpp"
#include "metisforge/fitness/objectives.hpp"

namespace metisforge::search {

// Non-dominated sorting over raw fitness pairs. Front 0 is the non-dominated
// set; front k is non-dominated once fronts < k are removed. Indices within a
// front come out in ascending order.
inline std::vector<std::vector<std::size_t>>
fast_nondominated_sort(const std::vector<fitness::FitnessPair>& fitnesses) {
    const std::size_t n = fitnesses.size();
    std::vector<std::vector<std::size_t>> dominated(n);
    std::vector<std::size_t> domination_count(n, 0);
    std::vector<std::vector<std::size_t>> fronts;

    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                continue;
            }
            if (fitness::dominates(fitnesses[i], fitnesses[j])) {
                dominated[i].push_back(j);
            } else if (fitness::dominates(fitnesses[j], fitnesses[i])) {
                ++domination_count[i];
            }
        }
        if (domination_count[i] == 0) {
            current.push_back(i);
        }
    }
    while (!current.empty()) {
        fronts.push_back(current);
        std::vector<std::size_t> next;
        for (std::size_t i : fronts.back()) {
            for (std::size_t j : dominated[i]) {
                if (--domination_count[j] == 0) {
                    next.push_back(j);
                }
            }
        }
        std::sort(next.begin(), next.end());
        current = std::move(next);
    }
    return fronts;
}

// Crowding values for one front, aligned with `front`. Per objective the two
// boundary individuals (after a stable sort on value, then index) get
// +infinity; interior individuals accumulate the neighbour gap normalized by
// twice the objective range. A degenerate range (zero, or undefined because
// both ends are the infinite sparseness sentinel) contributes nothing.
inline std::vector<double>
crowding_values(const std::vector<fitness::FitnessPair>& fitnesses,
                const std::vector<std::size_t>& front) {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    const std::size_t n = front.size();
    std::vector<double> crowding(n, 0.0);
    if (n == 0) {
        return crowding;
    }

    for (int objective = 0; objective < 2; ++objective) {
        const auto value = [&](std::size_t front_pos) {
            const fitness::FitnessPair& f = fitnesses[front[front_pos]];
            return objective == 0 ? f.f1 : f.f2;
        };
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) {
            order[i] = i;
        }
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (value(a) != value(b)) {
                return value(a) < value(b);
            }
            return front[a] < front[b];
        });
        crowding[order.front()] = kInf;
        crowding[order.back()] = kInf;
        const double range = value(order.back()) - value(order.front());
        if (!(std::isfinite(range) && range > 0.0)) {
            continue;
        }
        for (std::size_t pos = 1; pos + 1 < n; ++pos) {
            const double gap = value(order[pos + 1]) - value(order[pos - 1]);
            if (std::isfinite(gap)) {
                crowding[order[pos]] += gap / (2.0 * range);
            }
        }
    }
    return crowding;
}

// Writes non-domination ranks and crowding values onto the population.
template <typename Ind>
void assign_ranks_and_crowding(std::vector<Ind>& pop) {
    std::vector<fitness::FitnessPair> fitnesses;
    fitnesses.reserve(pop.size());
    for (const Ind& ind : pop) {
        if (!ind.evaluated) {
            throw std::logic_error("assign_ranks_and_crowding: unevaluated individual");
        }
        fitnesses.push_back(ind.fitness);
    }
    const std::vector<std::vector<std::size_t>> fronts = fast_nondominated_sort(fitnesses);
    for (std::size_t f = 0; f < fronts.size(); ++f) {
        const std::vector<double> crowding = crowding_values(fitnesses, fronts[f]);
        for (std::size_t pos = 0; pos < fronts[f].size(); ++pos) {
            pop[fronts[f][pos]].rank = static_cast<int>(f);
            pop[fronts[f][pos]].crowding = crowding[pos];
        }
    }
}

// One binary tournament: two contestants drawn uniformly with replacement;
// lower rank wins, then larger crowding, and a full tie falls to a coin flip
// (drawn from the rng even when both draws landed on the same index, so the
// draw sequence does not depend on the contestants).
template <typename Ind>
std::size_t tournament_pick(const std::vector<Ind>& pop, Rng& rng) {
    const std::size_t a = rng.uniform_index(pop.size());
    const std::size_t b = rng.uniform_index(pop.size());
    if (pop[a].rank != pop[b].rank) {
        return pop[a].rank < pop[b].rank ? a : b;
    }
    if (pop[a].crowding != pop[b].crowding) {
        return pop[a].crowding > pop[b].crowding ? a : b;
    }
    return rng.coin_flip() ? a : b;
}

// `count` winners of independent binary tournaments, returned as copies.
template <typename Ind>
std::vector<Ind> sel_tour_dcd(const std::vector<Ind>& pop, std::size_t count, Rng& rng) {
    std::vector<Ind> offspring;
    offspring.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        offspring.push_back(pop[tournament_pick(pop, rng)]);
    }
    return offspring;
}

// Environmental selection: ranks and crowding are (re)assigned on the merged
// population, whole fronts are admitted in order, and the last front that
// does not fit is truncated by descending crowding (ties by ascending id).
template <typename Ind>
std::vector<Ind> environmental_select(std::vector<Ind> merged, std::size_t popsize) {
    if (merged.size() < popsize) {
        throw std::logic_error("environmental_select: fewer individuals than capacity");
    }
    assign_ranks_and_crowding(merged);

    std::vector<fitness::FitnessPair> fitnesses;
    fitnesses.reserve(merged.size());
    for (const Ind& ind : merged) {
        fitnesses.push_back(ind.fitness);
    }
    const std::vector<std::vector<std::size_t>> fronts = fast_nondominated_sort(fitnesses);

    std::vector<Ind> selected;
    selected.reserve(popsize);
    for (const std::vector<std::size_t>& front : fronts) {
        if (selected.size() + front.size() <= popsize) {
            for (std::size_t i : front) {
                selected.push_back(merged[i]);
            }
            if (selected.size() == popsize) {
                break;
            }
            continue;
        }
        std::vector<std::size_t> order = front;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (merged[a].crowding != merged[b].crowding) {
                return merged[a].crowding > merged[b].crowding;
            }
            return merged[a].id < merged[b].id;
        });
        for (std::size_t i : order) {
            if (selected.size() == popsize) {
                break;
            }
            selected.push_back(merged[i]);
        }
        break;
    }
    return selected;
}

} // namespace metisforge::search

#endif // METISFORGE_SEARCH_NSGA2_HPP
