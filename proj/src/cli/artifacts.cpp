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

#include "metisforge/cli/artifacts.hpp"

#include <cctype>

#include "metisforge/common/text.hpp"
#include "metisforge/digit/svg.hpp"
#include "metisforge/gaze/render.hpp"
#include "metisforge/harness/model.hpp"

namespace metisforge::cli {

namespace {

using nlohmann::json;

std::string two_digits(int value) {
    std::string s = std::to_string(value);
    return s.size() < 2 ? "0" + s : s;
}

std::string three_digits(std::size_t value) {
    std::string s = std::to_string(value);
    while (s.size() < 3) {
        s.insert(s.begin(), '0');
    }
    return s;
}

std::string instance_file(int index) {
    return "instance_" + two_digits(index) + ".mfm";
}

} // namespace

std::filesystem::path baseline_dir(const RunConfig& cfg) {
    return cfg.output_dir / "baseline";
}
std::filesystem::path mutants_dir(const RunConfig& cfg) {
    return cfg.output_dir / "mutants";
}
std::filesystem::path augment_dir(const RunConfig& cfg) {
    return cfg.output_dir / "augment";
}
std::filesystem::path target_augment_dir(const RunConfig& cfg,
                                         const std::string& target_id) {
    return augment_dir(cfg) / sanitize_target_id(target_id);
}
std::filesystem::path crossval_dir(const RunConfig& cfg) {
    return cfg.output_dir / "crossval";
}
std::filesystem::path report_dir(const RunConfig& cfg) {
    return cfg.output_dir / "report";
}

std::string sanitize_target_id(const std::string& target_id) {
    std::string safe;
    safe.reserve(target_id.size());
    for (char c : target_id) {
        const bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
        safe.push_back(ok ? c : '_');
    }
    return safe;
}

void write_json_file(const std::filesystem::path& path, const json& value) {
    write_text_file(path, value.dump(2) + "\n");
}

json read_json_file(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path)) {
        throw MissingArtifactError("missing artifact: " + path.string());
    }
    return json::parse(read_text_file(path));
}

void write_csv_file(const std::filesystem::path& path,
                    const std::vector<std::string>& header,
                    const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    const auto append_row = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) {
                out.push_back(',');
            }
            out += cells[i];
        }
        out.push_back('\n');
    };
    append_row(header);
    for (const std::vector<std::string>& row : rows) {
        append_row(row);
    }
    write_text_file(path, out);
}

void write_timings(const std::filesystem::path& dir,
                   const std::map<std::string, double>& seconds) {
    json obj = json::object();
    for (const auto& [phase, value] : seconds) {
        obj[phase] = value;
    }
    write_json_file(dir / "timings.json", obj);
}

void save_instance_models(const std::filesystem::path& dir,
                          const std::vector<metisforge::harness::TinyModel>& instances) {
    std::filesystem::create_directories(dir);
    for (std::size_t i = 0; i < instances.size(); ++i) {
        metisforge::harness::save_model(dir / instance_file(static_cast<int>(i)),
                                        instances[i]);
    }
}

std::vector<metisforge::harness::TinyModel>
load_instance_models(const std::filesystem::path& dir, int n) {
    std::vector<metisforge::harness::TinyModel> instances;
    instances.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const std::filesystem::path path = dir / instance_file(i);
        if (!std::filesystem::exists(path)) {
            throw MissingArtifactError("missing artifact: " + path.string());
        }
        instances.push_back(metisforge::harness::load_model(path));
    }
    return instances;
}

json save_digit_archive(
    const std::filesystem::path& dir,
    const std::vector<search::Individual<search::DigitSearchDomain>>& entries) {
    std::filesystem::create_directories(dir);
    json list = json::array();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& entry = entries[i];
        const std::string svg_name = "entry_" + three_digits(i) + ".svg";
        const std::string pgm_name = "entry_" + three_digits(i) + ".pgm";
        digit::write_svg_file(dir / svg_name, entry.genotype.model, entry.seed_origin,
                              entry.genotype.label);
        digit::write_pgm_file(dir / pgm_name, entry.phenotype.grid);
        json row;
        row["file"] = svg_name;
        row["pgm"] = pgm_name;
        row["seed_origin"] = entry.seed_origin;
        row["label"] = entry.genotype.label;
        row["f1"] = format_double(entry.fitness.f1);
        row["f2"] = format_double(entry.fitness.f2);
        list.push_back(row);
    }
    return list;
}

metisforge::harness::DataSplit
load_digit_archive_rows(const std::filesystem::path& dir, const json& entry_list) {
    metisforge::harness::DataSplit rows;
    for (const json& row : entry_list) {
        const std::filesystem::path file = dir / row.at("file").get<std::string>();
        if (!std::filesystem::exists(file)) {
            throw MissingArtifactError("missing artifact: " + file.string());
        }
        const digit::SeedRecord record = digit::load_svg_file(file);
        const digit::DigitInput input = digit::rasterize_labeled(record.model, record.label);
        rows.inputs.push_back(search::DigitSearchDomain::to_model_input(input));
        rows.labels.push_back(record.label);
    }
    return rows;
}

json save_gaze_archive(
    const std::vector<search::Individual<search::GazeSearchDomain>>& entries) {
    json list = json::array();
    for (const auto& entry : entries) {
        json row;
        row["seed_origin"] = entry.seed_origin;
        row["f1"] = format_double(entry.fitness.f1);
        row["f2"] = format_double(entry.fitness.f2);
        row["chromosome"] = gaze::to_json_record(entry.genotype);
        list.push_back(row);
    }
    return list;
}

metisforge::harness::DataSplit load_gaze_archive_rows(const json& entry_list,
                                                      std::uint64_t noise_seed) {
    metisforge::harness::DataSplit rows;
    for (const json& row : entry_list) {
        const gaze::EyeChromosome chromosome = gaze::from_json_record(row.at("chromosome"));
        const gaze::FeatureVector features = gaze::render_features(chromosome, noise_seed);
        rows.inputs.push_back(search::GazeSearchDomain::to_model_input(features));
        rows.targets.emplace_back(features.truth_pitch, features.truth_yaw);
    }
    return rows;
}

void write_run_log(const std::filesystem::path& path,
                   const std::vector<search::GenerationRecord>& log) {
    std::string out;
    for (const search::GenerationRecord& record : log) {
        json line;
        line["generation"] = record.generation;
        line["best_f1"] = format_double(record.best_f1);
        line["mean_f1"] = format_double(record.mean_f1);
        line["archive_size"] = record.archive_size;
        out += line.dump() + "\n";
    }
    write_text_file(path, out);
}

} // namespace metisforge::cli
