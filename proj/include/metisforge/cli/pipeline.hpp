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

#ifndef METISFORGE_CLI_PIPELINE_HPP
#define METISFORGE_CLI_PIPELINE_HPP

#include <optional>
#include <string>

#include "metisforge/cli/run_config.hpp"

namespace metisforge::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitNoTargets = 2;
inline constexpr int kExitMissingArtifacts = 3;

struct CommandOptions {
    bool force = false;
    std::optional<std::string> target; // augment: restrict to one target id
};

// Pipeline stages. Each returns a process exit code; they never throw for
// the conditions the exit codes cover, but let unexpected errors propagate
// to run_command.
int cmd_baseline(const RunConfig& cfg, const CommandOptions& options);
int cmd_mutants(const RunConfig& cfg, const CommandOptions& options);
int cmd_augment(const RunConfig& cfg, const CommandOptions& options);
int cmd_crossval(const RunConfig& cfg, const CommandOptions& options);
int cmd_report(const RunConfig& cfg, const CommandOptions& options);

// Dispatches by command name and maps exceptions to exit codes (missing
// prerequisite artifacts -> kExitMissingArtifacts, anything else ->
// kExitFailure), printing the reason to stderr.
int run_command(const std::string& command, const RunConfig& cfg,
                const CommandOptions& options);

} // namespace metisforge::cli

#endif // METISFORGE_CLI_PIPELINE_HPP
