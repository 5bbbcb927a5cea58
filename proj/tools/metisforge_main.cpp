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

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "metisforge/cli/pipeline.hpp"
#include "metisforge/cli/run_config.hpp"

namespace {

struct CliState {
    std::string config_file;
    bool force = false;
    bool full_scale = false;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> target;
};

void add_common_options(CLI::App* cmd, CliState& state, bool with_target) {
    cmd->add_option("--config", state.config_file, "Run configuration file (JSON)")
        ->required();
    cmd->add_flag("--force", state.force, "Overwrite artifacts this stage already produced");
    cmd->add_flag("--full-scale", state.full_scale,
                  "Use the full-scale population/generation settings instead of the "
                  "quick defaults");
    cmd->add_option("--seed", state.seed, "Override the search RNG seed from the config");
    if (with_target) {
        cmd->add_option("--target", state.target,
                        "Restrict augmentation to one target id (e.g. TRD or ACH:0:sigmoid)");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"metisforge: evolves test inputs that expose surviving trained-model "
                 "mutants and measures the mutation-score gain"};
    app.require_subcommand(1);

    CliState state;
    CLI::App* baseline = app.add_subcommand(
        "baseline", "Train the original model instances and derive the weak test set");
    CLI::App* mutants = app.add_subcommand(
        "mutants", "Search each operator for the configurations the weak test set misses");
    CLI::App* augment = app.add_subcommand(
        "augment", "Evolve archives of inputs against every surviving target");
    CLI::App* crossval = app.add_subcommand(
        "crossval", "Assess each target against inputs generated for the other operators");
    CLI::App* report =
        app.add_subcommand("report", "Merge all stage outputs into summary tables");

    add_common_options(baseline, state, false);
    add_common_options(mutants, state, false);
    add_common_options(augment, state, true);
    add_common_options(crossval, state, false);
    add_common_options(report, state, false);

    CLI11_PARSE(app, argc, argv);

    try {
        metisforge::cli::RunConfig cfg = metisforge::cli::load_run_config(state.config_file);
        if (state.full_scale) {
            metisforge::cli::apply_full_scale(cfg);
        }
        if (state.seed) {
            cfg.search.rng_seed = *state.seed;
        }
        metisforge::cli::validate(cfg);

        metisforge::cli::CommandOptions options;
        options.force = state.force;
        options.target = state.target;
        const std::string command = app.get_subcommands().front()->get_name();
        return metisforge::cli::run_command(command, cfg, options);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return metisforge::cli::kExitFailure;
    }
}
