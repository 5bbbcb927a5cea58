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

#ifndef METISFORGE_CLI_RUN_CONFIG_HPP
#define METISFORGE_CLI_RUN_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "metisforge/analysis/stats.hpp"
#include "metisforge/harness/quality.hpp"
#include "metisforge/harness/train.hpp"
#include "metisforge/search/engine.hpp"

namespace metisforge::cli {

inline constexpr int kConfigSchemaVersion = 1;

// How many instances to train (n), how many of them guide the search as
// originals (o) and mutants (m), and the seed all instance seeds derive from.
struct HarnessConfig {
    int n = 6;
    int o = 1;
    int m = 5;
    std::uint64_t base_seed = 2026;
    stats::RankTest rank_test = stats::RankTest::unpaired;
    metisforge::harness::TrainSpec train;
};

// One mutation-operator family to search: a parameter range with resolution
// epsilon for continuous operators, or an explicit candidate list for
// discrete ones. target_label / second_label feed the label-targeted data
// operators.
struct OperatorConfig {
    std::string op;
    double lo = 0.0;
    double hi = 0.99;
    double epsilon = 0.01;
    int target_label = -1;
    int second_label = -1;
    std::vector<std::string> values;
};

struct RunConfig {
    std::string subject; // "digits" or "regression"
    std::filesystem::path dataset;
    std::filesystem::path seeds;
    std::filesystem::path output_dir;
    int run_count = 10;
    HarnessConfig harness;
    metisforge::search::SearchConfig search;
    double mutation_extent_lo = 1.0; // digit point displacement, canvas units
    double mutation_extent_hi = 3.0;
    double archive_threshold = 0.55; // regression archive spacing t_a
    metisforge::harness::WeakSetOptions weakness;
    std::vector<OperatorConfig> operators;

    bool is_digits() const { return subject == "digits"; }
    metisforge::harness::Task task() const {
        return is_digits() ? metisforge::harness::Task::classification
                           : metisforge::harness::Task::regression;
    }
};

// Parses and validates a config file. The file is JSON with a mandatory
// schema_version; unknown keys anywhere are errors so typos fail fast.
RunConfig load_run_config(const std::filesystem::path& file);

void validate(const RunConfig& cfg);

// Switches the population sizing from the desk-scale defaults to the
// full-scale settings (digits 100x1000, regression 12x100 population by
// generations).
void apply_full_scale(RunConfig& cfg);

} // namespace metisforge::cli

#endif // METISFORGE_CLI_RUN_CONFIG_HPP
