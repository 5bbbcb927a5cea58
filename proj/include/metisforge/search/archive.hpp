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

#ifndef METISFORGE_SEARCH_ARCHIVE_HPP
#define METISFORGE_SEARCH_ARCHIVE_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "metisforge/search/individual.hpp"

namespace metisforge::search {

// How the archive decides which solutions are "the same niche": one slot per
// originating seed (digit domain), or open slots separated by more than a
// distance threshold t_a (regression domain).
enum class ArchivePolicy {
    per_seed,
    distance_threshold,
};

template <typename Domain>
class Archive {
public:
    explicit Archive(ArchivePolicy policy, double t_a = 0.0) : policy_(policy), t_a_(t_a) {
        if (policy == ArchivePolicy::distance_threshold && !(t_a >= 0.0)) {
            throw std::invalid_argument("archive: t_a must be nonnegative");
        }
    }

    ArchivePolicy policy() const { return policy_; }
    double threshold() const { return t_a_; }
    const std::vector<Individual<Domain>>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    // Distances from `ind` to every stored entry other than `ind` itself,
    // in entry order; the input to the sparseness objective.
    std::vector<double> distances_to(const Individual<Domain>& ind,
                                     const Domain& domain) const {
        std::vector<double> distances;
        distances.reserve(entries_.size());
        for (const Individual<Domain>& entry : entries_) {
            if (entry.id == ind.id) {
                continue;
            }
            distances.push_back(domain.distance(entry, ind));
        }
        return distances;
    }

    // Offers one evaluated individual. Non-candidates are ignored. Otherwise
    // the candidate competes for its niche: the incumbent with the same seed
    // (per-seed policy) or the nearest neighbour within t_a (threshold
    // policy); lower f1 wins and ties keep the incumbent. Under the
    // threshold policy a winning candidate still replaces its neighbour only
    // if it keeps more than t_a to every other entry, so the pairwise
    // spacing invariant survives every update. Returns true if the archive
    // changed.
    bool offer(const Individual<Domain>& candidate, const Domain& domain) {
        if (!candidate.evaluated || !candidate.is_candidate()) {
            return false;
        }
        if (policy_ == ArchivePolicy::per_seed) {
            for (Individual<Domain>& entry : entries_) {
                if (entry.seed_origin == candidate.seed_origin) {
                    if (candidate.fitness.f1 < entry.fitness.f1) {
                        entry = candidate;
                        return true;
                    }
                    return false;
                }
            }
            entries_.push_back(candidate);
            return true;
        }

        if (entries_.empty()) {
            entries_.push_back(candidate);
            return true;
        }
        std::size_t nearest = 0;
        double nearest_dist = domain.distance(entries_[0], candidate);
        for (std::size_t i = 1; i < entries_.size(); ++i) {
            const double d = domain.distance(entries_[i], candidate);
            if (d < nearest_dist) {
                nearest_dist = d;
                nearest = i;
            }
        }
        if (nearest_dist > t_a_) {
            entries_.push_back(candidate);
            return true;
        }
        if (!(candidate.fitness.f1 < entries_[nearest].fitness.f1)) {
            return false;
        }
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i == nearest) {
                continue;
            }
            if (!(domain.distance(entries_[i], candidate) > t_a_)) {
                return false;
            }
        }
        entries_[nearest] = candidate;
        return true;
    }

    // Offers every individual of a generation, in the order given.
    void update(const std::vector<Individual<Domain>>& generation, const Domain& domain) {
        for (const Individual<Domain>& ind : generation) {
            offer(ind, domain);
        }
    }

private:
    ArchivePolicy policy_;
    double t_a_;
    std::vector<Individual<Domain>> entries_;
};

} // namespace metisforge::search

#endif // METISFORGE_SEARCH_ARCHIVE_HPP
