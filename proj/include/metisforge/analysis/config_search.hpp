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

#ifndef METISFORGE_ANALYSIS_CONFIG_SEARCH_HPP_
#define METISFORGE_ANALYSIS_CONFIG_SEARCH_HPP_

#include <functional>
#include <string>
#include <vector>

namespace metisforge::analysis {

enum class SearchKind { continuous, discrete };

// One oracle invocation: the parameter probed and whether that configuration
// was killed by the evaluation set backing the oracle.
struct ContinuousProbe {
    double param = 0.0;
    bool killed = false;
};

struct DiscreteProbe {
    std::string value;
    bool killed = false;
};

struct OperatorSearchResult {
    std::string op;
    SearchKind kind = SearchKind::continuous;

    // Continuous search state. `boundary` is the last probed parameter that
    // was NOT killed; the killed region is the open-below interval
    // (boundary, hi]. `none_killed` marks an empty killed region (the most
    // aggressive configuration survived); `all_killed` marks the degenerate
    // case where even `lo` was killed, reported with boundary = lo.
    double lo = 0.0;
    double hi = 0.0;
    double epsilon = 0.0;
    double boundary = 0.0;
    bool none_killed = false;
    bool all_killed = false;
    bool monotonicity_warning = false;
    std::vector<ContinuousProbe> probes;

    // Discrete search state.
    std::vector<std::string> killed_set;
    std::vector<DiscreteProbe> discrete_probes;

    bool killed_region_empty() const {
        return kind == SearchKind::continuous ? none_killed : killed_set.empty();
    }
};

using KillOracle = std::function<bool(double)>;
using DiscreteKillOracle = std::function<bool(const std::string&)>;

// Bisects the aggressiveness range for a continuous operator. Probes the most
// aggressive end first; if that configuration survives, returns immediately
// with an empty killed region. Otherwise narrows [low, high] keeping `high`
// killed until the window is at most `epsilon` wide, and reports the last
// surviving parameter as the boundary. If every probe was killed, probes `lo`
// to decide between a boundary at `lo` and the all-killed degenerate flag.
OperatorSearchResult binary_search_config(const std::string& op, const KillOracle& oracle,
                                          double lo, double hi, double epsilon);

// Probes every discrete value in order and collects the killed ones.
OperatorSearchResult exhaustive_search(const std::string& op,
                                       const std::vector<std::string>& values,
                                       const DiscreteKillOracle& oracle);

// Upper bound on oracle invocations for binary_search_config over this range.
std::size_t max_probe_count(double lo, double hi, double epsilon);

} // namespace metisforge::analysis

#endif // METISFORGE_ANALYSIS_CONFIG_SEARCH_HPP_
