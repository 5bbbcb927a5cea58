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

#include "metisforge/analysis/config_search.hpp"

#include <cmath>
#include <stdexcept>

namespace metisforge::analysis {

namespace {

bool probe(OperatorSearchResult& result, const KillOracle& oracle, double param) {
    const bool killed = oracle(param);
    // A killed probe below a surviving one (or vice versa) contradicts the
    // single-interval model of the killed region.
    for (const ContinuousProbe& past : result.probes) {
        if ((killed && !past.killed && past.param > param) ||
            (!killed && past.killed && past.param < param)) {
            result.monotonicity_warning = true;
        }
    }
    result.probes.push_back({param, killed});
    return killed;
}

} // namespace

std::size_t max_probe_count(double lo, double hi, double epsilon) {
    const double ratio = (hi - lo) / epsilon;
    return static_cast<std::size_t>(std::ceil(std::log2(ratio))) + 2;
}

OperatorSearchResult binary_search_config(const std::string& op, const KillOracle& oracle,
                                          double lo, double hi, double epsilon) {
    if (!(epsilon > 0.0)) {
        throw std::invalid_argument("binary_search_config: epsilon must be positive");
    }
    if (!(lo < hi)) {
        throw std::invalid_argument("binary_search_config: range must satisfy lo < hi");
    }
    OperatorSearchResult result;
    result.op = op;
    result.kind = SearchKind::continuous;
    result.lo = lo;
    result.hi = hi;
    result.epsilon = epsilon;

    if (!probe(result, oracle, hi)) {
        result.none_killed = true;
        result.boundary = hi;
        return result;
    }

    double low = lo;   // below or at the boundary; probed only in the degenerate path
    double high = hi;  // always a killed parameter
    bool saw_survivor = false;
    double last_survivor = lo;
    while (high - low > epsilon) {
        const double mid = low + (high - low) / 2.0;
        if (probe(result, oracle, mid)) {
            high = mid;
        } else {
            low = mid;
            saw_survivor = true;
            last_survivor = mid;
        }
    }
    if (saw_survivor) {
        result.boundary = last_survivor;
        return result;
    }
    // Every probed parameter was killed; decide whether lo itself survives.
    if (probe(result, oracle, lo)) {
        result.all_killed = true;
        result.boundary = lo;
    } else {
        result.boundary = lo;
    }
    return result;
}

OperatorSearchResult exhaustive_search(const std::string& op,
                                       const std::vector<std::string>& values,
                                       const DiscreteKillOracle& oracle) {
    if (values.empty()) {
        throw std::invalid_argument("exhaustive_search: values must be non-empty");
    }
    OperatorSearchResult result;
    result.op = op;
    result.kind = SearchKind::discrete;
    for (const std::string& value : values) {
        const bool killed = oracle(value);
        result.discrete_probes.push_back({value, killed});
        if (killed) {
            result.killed_set.push_back(value);
        }
    }
    return result;
}

} // namespace metisforge::analysis
