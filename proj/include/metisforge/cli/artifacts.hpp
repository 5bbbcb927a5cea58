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

#ifndef METISFORGE_CLI_ARTIFACTS_HPP
#define METISFORGE_CLI_ARTIFACTS_HPP

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "metisforge/cli/run_config.hpp"
#include "metisforge/harness/dataset.hpp"
#include "metisforge/harness/mutation.hpp"
#include "metisforge/search/digit_domain.hpp"
#include "metisforge/search/gaze_domain.hpp"

namespace metisforge::cli {

// A required input artifact (from an earlier pipeline stage) is absent;
// mapped to its own exit code by the command driver.
struct MissingArtifactError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Artifact layout under output_dir. Every command owns one subdirectory and
// marks completion by writing its manifest last.
std::filesystem::path baseline_dir(const RunConfig& cfg);
std::filesystem::path mutants_dir(const RunConfig& cfg);
std::filesystem::path augment_dir(const RunConfig& cfg);
std::filesystem::path target_augment_dir(const RunConfig& cfg, const std::string& target_id);
std::filesystem::path crossval_dir(const RunConfig& cfg);
std::filesystem::path report_dir(const RunConfig& cfg);

// Filesystem-safe directory name for a target id like "ACH:0:sigmoid".
std::string sanitize_target_id(const std::string& target_id);

// JSON files are dumped with two-space indent, sorted keys, and a trailing
// newline, so identical content means identical bytes.
void write_json_file(const std::filesystem::path& path, const nlohmann::json& value);
nlohmann::json read_json_file(const std::filesystem::path& path);

// CSV: header row plus data rows, comma separation, no quoting (values are
// controlled and never contain commas).
void write_csv_file(const std::filesystem::path& path,
                    const std::vector<std::string>& header,
                    const std::vector<std::vector<std::string>>& rows);

// Wall-clock phase timings, written beside the manifests but never compared
// for determinism.
void write_timings(const std::filesystem::path& dir,
                   const std::map<std::string, double>& seconds);

// Trained instance files: instance_00.mfm, instance_01.mfm, ... in `dir`.
void save_instance_models(const std::filesystem::path& dir,
                          const std::vector<metisforge::harness::TinyModel>& instances);
std::vector<metisforge::harness::TinyModel>
load_instance_models(const std::filesystem::path& dir, int n);

// Digit archives: one curve file (entry_NNN.svg) and one grayscale preview
// (entry_NNN.pgm) per entry, plus rows describing them for the run manifest.
nlohmann::json
save_digit_archive(const std::filesystem::path& dir,
                   const std::vector<search::Individual<search::DigitSearchDomain>>& entries);

// Re-reads archived digit inputs as model-ready rows (inputs + labels).
metisforge::harness::DataSplit
load_digit_archive_rows(const std::filesystem::path& dir, const nlohmann::json& entry_list);

// Gaze archives: chromosome records embedded in the manifest; rendering is
// reproduced from the recorded noise seed.
nlohmann::json
save_gaze_archive(const std::vector<search::Individual<search::GazeSearchDomain>>& entries);

metisforge::harness::DataSplit load_gaze_archive_rows(const nlohmann::json& entry_list,
                                                      std::uint64_t noise_seed);

// Serialized per-generation search progress, one JSON object per line.
void write_run_log(const std::filesystem::path& path,
                   const std::vector<search::GenerationRecord>& log);

} // namespace metisforge::cli

#endif // METISFORGE_CLI_ARTIFACTS_HPP
