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

#include "metisforge/cli/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "metisforge/analysis/config_search.hpp"
#include "metisforge/analysis/score.hpp"
#include "metisforge/analysis/stats.hpp"
#include "metisforge/cli/artifacts.hpp"
#include "metisforge/common/text.hpp"
#include "metisforge/digit/svg.hpp"
#include "metisforge/gaze/chromosome.hpp"
#include "metisforge/harness/dataset.hpp"
#include "metisforge/harness/model.hpp"
#include "metisforge/harness/mutation.hpp"
#include "metisforge/harness/quality.hpp"
#include "metisforge/harness/train.hpp"
#include "metisforge/search/digit_domain.hpp"
#include "metisforge/search/engine.hpp"
#include "metisforge/search/gaze_domain.hpp"

namespace metisforge::cli {
namespace {

namespace fs = std::filesystem;
namespace mh = metisforge::harness;
using nlohmann::json;

// Mutant instances derive their per-instance seeds from a shifted base so an
// original and a mutant trained under an identical spec can never share a
// model fingerprint (which would poison the shared evaluation memo).
constexpr std::uint64_t kMutantSeedOffset = 10000;

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

std::string hex_u64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return std::string(buf);
}

std::string two_digits(int v) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%02d", v);
    return std::string(buf);
}

std::string run_dir_name(int run) { return "run_" + two_digits(run); }

mh::Dataset load_subject_dataset(const RunConfig& cfg) {
    mh::Dataset ds = mh::load_dataset(cfg.dataset);
    if (ds.task != cfg.task()) {
        throw std::runtime_error("dataset '" + cfg.dataset.string() +
                                 "' does not match subject '" + cfg.subject + "'");
    }
    return ds;
}

json read_manifest(const fs::path& dir) { return read_json_file(dir / "manifest.json"); }

// Everything the downstream stages need from a finished `baseline` stage: the
// dataset it was built from (hash-checked), the n trained instances, and the
// weakened test split reconstructed from the stored row indices.
struct BaselineContext {
    mh::Dataset ds;
    mh::ModelInstanceSet originals;
    mh::DataSplit weak;
    json manifest;
};

BaselineContext load_baseline(const RunConfig& cfg) {
    BaselineContext ctx;
    ctx.manifest = read_manifest(baseline_dir(cfg));
    ctx.ds = load_subject_dataset(cfg);
    const std::string want = hex_u64(mh::dataset_hash(ctx.ds));
    const std::string have = ctx.manifest.at("dataset_hash").get<std::string>();
    if (want != have) {
        throw std::runtime_error(
            "dataset content changed since the baseline was built; rerun `metisforge "
            "baseline --force`");
    }
    if (ctx.manifest.at("n").get<int>() != cfg.harness.n) {
        throw std::runtime_error(
            "config asks for a different instance count than the stored baseline; rerun "
            "`metisforge baseline --force`");
    }
    ctx.originals.instances = load_instance_models(baseline_dir(cfg), cfg.harness.n);
    ctx.originals.base_seed = cfg.harness.base_seed;
    const auto indices =
        ctx.manifest.at("weak").at("indices").get<std::vector<std::size_t>>();
    ctx.weak = mh::subset(ctx.ds.test, ctx.ds.task, indices);
    return ctx;
}

std::vector<double> quality_samples(const std::vector<mh::TinyModel>& models,
                                    const mh::DataSplit& split) {
    std::vector<double> out;
    out.reserve(models.size());
    for (const mh::TinyModel& model : models) {
        out.push_back(mh::quality_metric(model, split));
    }
    return out;
}

stats::KillOutcome assess_kill(const std::vector<mh::TinyModel>& originals,
                               const std::vector<mh::TinyModel>& mutants,
                               const mh::DataSplit& split, stats::RankTest test) {
    return stats::is_killed(quality_samples(originals, split),
                            quality_samples(mutants, split), test);
}

// Resolves a continuous operator's aggressiveness into the concrete mutation:
// percentage operators take the parameter verbatim, while the hyperparameter
// operators map it onto the underlying learning rate / epoch count.
mh::MutationSpec continuous_spec(const OperatorConfig& op, const mh::TrainSpec& train,
                                 double aggressiveness) {
    mh::MutationSpec mu;
    mu.op = op.op;
    mu.target_label = op.target_label;
    mu.second_label = op.second_label;
    if (op.op == "HLR") {
        mu.param = mh::hlr_learning_rate(train.learning_rate, aggressiveness);
    } else if (op.op == "HNE") {
        mu.param = static_cast<double>(mh::hne_epochs(train.epochs, aggressiveness));
    } else {
        mu.param = aggressiveness;
    }
    return mu;
}

mh::MutationSpec discrete_spec(const OperatorConfig& op, const std::string& value) {
    mh::MutationSpec mu;
    mu.op = op.op;
    mu.discrete_value = value;
    return mu;
}

// A mutant configuration either trains n instances or blows up numerically.
// Divergence is maximal misbehaviour, so such a configuration counts as
// killed by every test set without needing quality samples.
struct MutantBuild {
    bool diverged = false;
    std::string note;
    std::vector<mh::TinyModel> instances;
};

// Trains mutant instance sets on demand and keeps them for the lifetime of a
// command, so repeated probes of the same configuration (across binary
// searches, runs, and targets) train exactly once.
class MutantCache {
public:
    MutantCache(const mh::Dataset& ds, const RunConfig& cfg) : ds_(ds), cfg_(cfg) {}

    const MutantBuild& build(const mh::MutationSpec& mu) {
        const std::string key = mu.op + "|" + format_double(mu.param) + "|" + mu.discrete_value;
        auto it = cache_.find(key);
        if (it == cache_.end()) {
            MutantBuild entry;
            try {
                entry.instances =
                    mh::build_instances(ds_, cfg_.harness.train, mu, cfg_.harness.n,
                                        cfg_.harness.base_seed + kMutantSeedOffset)
                        .instances;
            } catch (const mh::TrainingDiverged& e) {
                entry.diverged = true;
                entry.note = e.what();
                std::cout << "note: configuration " << key
                          << " diverged during training; counted as killed\n";
            }
            it = cache_.emplace(key, std::move(entry)).first;
        }
        return it->second;
    }

private:
    const mh::Dataset& ds_;
    const RunConfig& cfg_;
    std::map<std::string, MutantBuild> cache_;
};

json continuous_result_json(const analysis::OperatorSearchResult& r) {
    json probes = json::array();
    for (const analysis::ContinuousProbe& p : r.probes) {
        probes.push_back({{"param", p.param}, {"killed", p.killed}});
    }
    return json{{"boundary", r.boundary},
                {"none_killed", r.none_killed},
                {"all_killed", r.all_killed},
                {"monotonicity_warning", r.monotonicity_warning},
                {"probes", probes}};
}

analysis::OperatorSearchResult continuous_result_from_json(const OperatorConfig& op,
                                                           const json& j) {
    analysis::OperatorSearchResult r;
    r.op = op.op;
    r.kind = analysis::SearchKind::continuous;
    r.lo = op.lo;
    r.hi = op.hi;
    r.epsilon = op.epsilon;
    r.boundary = j.at("boundary").get<double>();
    r.none_killed = j.at("none_killed").get<bool>();
    r.all_killed = j.at("all_killed").get<bool>();
    r.monotonicity_warning = j.at("monotonicity_warning").get<bool>();
    for (const json& p : j.at("probes")) {
        r.probes.push_back({p.at("param").get<double>(), p.at("killed").get<bool>()});
    }
    return r;
}

json discrete_result_json(const analysis::OperatorSearchResult& r) {
    json probes = json::array();
    for (const analysis::DiscreteProbe& p : r.discrete_probes) {
        probes.push_back({{"value", p.value}, {"killed", p.killed}});
    }
    return json{{"killed_values", r.killed_set}, {"probes", probes}};
}

analysis::OperatorSearchResult discrete_result_from_json(const OperatorConfig& op,
                                                         const json& j) {
    analysis::OperatorSearchResult r;
    r.op = op.op;
    r.kind = analysis::SearchKind::discrete;
    r.killed_set = j.at("killed_values").get<std::vector<std::string>>();
    for (const json& p : j.at("probes")) {
        r.discrete_probes.push_back({p.at("value").get<std::string>(), p.at("killed").get<bool>()});
    }
    return r;
}

// One surviving mutant configuration selected by the `mutants` stage,
// rehydrated from its manifest entry.
struct TargetInfo {
    std::string id;
    OperatorConfig op;
    analysis::SearchKind kind = analysis::SearchKind::continuous;
    double param = 0.0;      // continuous: target aggressiveness
    std::string value;       // discrete: target value
    fs::path instance_dir;   // where the trained mutant instances live
    analysis::OperatorSearchResult train_result;
    double weak_k = 0.0;     // mutation score of the weak set for this operator
};

const OperatorConfig& find_operator(const RunConfig& cfg, const std::string& name) {
    for (const OperatorConfig& op : cfg.operators) {
        if (op.op == name) {
            return op;
        }
    }
    throw std::runtime_error("mutants manifest names operator '" + name +
                             "' which is not present in the config");
}

std::vector<TargetInfo> collect_targets(const RunConfig& cfg, const json& mutants_manifest) {
    std::vector<TargetInfo> out;
    for (const json& entry : mutants_manifest.at("operators")) {
        if (entry.at("likely_equivalent").get<bool>()) {
            continue;
        }
        const std::string name = entry.at("op").get<std::string>();
        const OperatorConfig& op = find_operator(cfg, name);
        const std::string kind = entry.at("kind").get<std::string>();
        for (const json& t : entry.at("targets")) {
            TargetInfo info;
            info.id = t.at("id").get<std::string>();
            info.op = op;
            if (kind == "continuous") {
                info.kind = analysis::SearchKind::continuous;
                info.param = t.at("param").get<double>();
                info.train_result = continuous_result_from_json(op, entry.at("train_search"));
            } else {
                info.kind = analysis::SearchKind::discrete;
                info.value = t.at("value").get<std::string>();
                info.train_result = discrete_result_from_json(op, entry.at("train_search"));
            }
            info.instance_dir = mutants_dir(cfg) / t.at("dir").get<std::string>();
            info.weak_k = entry.at("weak_killing_probability").get<double>();
            out.push_back(std::move(info));
        }
    }
    return out;
}

void append_rows(mh::DataSplit& dst, const mh::DataSplit& src, mh::Task task) {
    dst.inputs.insert(dst.inputs.end(), src.inputs.begin(), src.inputs.end());
    if (task == mh::Task::classification) {
        dst.labels.insert(dst.labels.end(), src.labels.begin(), src.labels.end());
    } else {
        dst.targets.insert(dst.targets.end(), src.targets.begin(), src.targets.end());
    }
}

std::vector<search::SeedEntry<search::DigitSearchDomain>>
load_digit_corpus(const RunConfig& cfg) {
    if (!fs::exists(cfg.seeds)) {
        throw std::runtime_error("seed corpus '" + cfg.seeds.string() + "' not found");
    }
    return search::digit_seed_entries(digit::load_seed_corpus_dir(cfg.seeds));
}

std::vector<search::SeedEntry<search::GazeSearchDomain>>
load_gaze_corpus(const RunConfig& cfg) {
    if (!fs::exists(cfg.seeds)) {
        throw std::runtime_error("seed corpus '" + cfg.seeds.string() + "' not found");
    }
    const json root = read_json_file(cfg.seeds);
    if (!root.contains("schema_version") || root.at("schema_version").get<int>() != 1) {
        throw std::runtime_error("seed corpus '" + cfg.seeds.string() +
                                 "' must declare schema_version 1");
    }
    std::vector<search::SeedEntry<search::GazeSearchDomain>> out;
    std::set<std::string> seen;
    for (const json& s : root.at("seeds")) {
        search::SeedEntry<search::GazeSearchDomain> entry;
        entry.id = s.at("id").get<std::string>();
        if (!seen.insert(entry.id).second) {
            throw std::runtime_error("seed corpus has duplicate id '" + entry.id + "'");
        }
        entry.genotype = gaze::from_json_record(s.at("chromosome"));
        out.push_back(std::move(entry));
    }
    if (out.empty()) {
        throw std::runtime_error("seed corpus '" + cfg.seeds.string() + "' is empty");
    }
    return out;
}

// Per-run RNG seeds; derived as rng_seed + run index, persisted once so a
// resumed session can verify it is continuing the same experiment.
std::vector<std::uint64_t> ensure_run_seeds(const RunConfig& cfg, const fs::path& dir,
                                            bool force) {
    std::vector<std::uint64_t> seeds;
    seeds.reserve(static_cast<std::size_t>(cfg.run_count));
    for (int r = 0; r < cfg.run_count; ++r) {
        seeds.push_back(cfg.search.rng_seed + static_cast<std::uint64_t>(r));
    }
    const fs::path path = dir / "population_seeds.json";
    if (fs::exists(path) && !force) {
        const auto stored = read_json_file(path).at("seeds").get<std::vector<std::uint64_t>>();
        if (stored != seeds) {
            throw std::runtime_error(
                "augment: population_seeds.json disagrees with the configured seed and "
                "run_count; pass --force to restart the experiment");
        }
        return seeds;
    }
    write_json_file(path, json{{"schema_version", 1}, {"seeds", seeds}});
    return seeds;
}

// Everything one evolutionary run produces that later stages consume.
struct RunProducts {
    json archive_entries;
    mh::DataSplit archive_rows;
    std::vector<search::GenerationRecord> log;
    std::uint64_t noise_seed = 0;
};

RunProducts execute_digit_run(const RunConfig& cfg, std::uint64_t seed, const fs::path& run_dir,
                              const std::vector<search::SeedEntry<search::DigitSearchDomain>>& corpus,
                              const mh::ModelInstanceSet& originals,
                              const mh::ModelInstanceSet& mutants) {
    search::DigitSearchDomain domain;
    domain.extent = {cfg.mutation_extent_lo, cfg.mutation_extent_hi};
    search::SearchConfig scfg = cfg.search;
    scfg.rng_seed = seed;
    search::SearchResult<search::DigitSearchDomain> result = search::run_search(
        domain, scfg, search::ArchivePolicy::per_seed, 0.0, originals, mutants, corpus);
    RunProducts out;
    out.log = std::move(result.log);
    out.archive_entries = save_digit_archive(run_dir / "archive", result.archive.entries());
    for (const auto& entry : result.archive.entries()) {
        out.archive_rows.inputs.push_back(
            search::DigitSearchDomain::to_model_input(entry.phenotype));
        out.archive_rows.labels.push_back(entry.phenotype.label);
    }
    return out;
}

RunProducts execute_gaze_run(const RunConfig& cfg, std::uint64_t seed,
                             const std::vector<search::SeedEntry<search::GazeSearchDomain>>& corpus,
                             const mh::ModelInstanceSet& originals,
                             const mh::ModelInstanceSet& mutants) {
    search::GazeSearchDomain domain;
    domain.noise_seed = seed;
    search::SearchConfig scfg = cfg.search;
    scfg.rng_seed = seed;
    search::SearchResult<search::GazeSearchDomain> result =
        search::run_search(domain, scfg, search::ArchivePolicy::distance_threshold,
                           cfg.archive_threshold, originals, mutants, corpus);
    RunProducts out;
    out.noise_seed = seed;
    out.log = std::move(result.log);
    out.archive_entries = save_gaze_archive(result.archive.entries());
    for (const auto& entry : result.archive.entries()) {
        out.archive_rows.inputs.push_back(
            search::GazeSearchDomain::to_model_input(entry.phenotype));
        out.archive_rows.targets.emplace_back(entry.phenotype.truth_pitch,
                                              entry.phenotype.truth_yaw);
    }
    return out;
}

bool augment_complete(const RunConfig& cfg, const TargetInfo& target) {
    const fs::path tdir = target_augment_dir(cfg, target.id);
    if (!fs::exists(tdir / "report.json")) {
        return false;
    }
    for (int r = 0; r < cfg.run_count; ++r) {
        if (!fs::exists(tdir / run_dir_name(r) / "manifest.json")) {
            return false;
        }
    }
    return true;
}

} // namespace

int cmd_baseline(const RunConfig& cfg, const CommandOptions& options) {
    Timer total_timer;
    const fs::path dir = baseline_dir(cfg);
    const fs::path manifest_path = dir / "manifest.json";
    if (fs::exists(manifest_path) && !options.force) {
        std::cerr << "baseline: " << manifest_path.string()
                  << " already exists; pass --force to rebuild\n";
        return kExitFailure;
    }
    mh::Dataset ds = load_subject_dataset(cfg);
    fs::create_directories(dir);

    Timer train_timer;
    mh::ModelInstanceSet originals = mh::build_instances(
        ds, cfg.harness.train, std::nullopt, cfg.harness.n, cfg.harness.base_seed);
    const double train_seconds = train_timer.seconds();
    save_instance_models(dir, originals.instances);

    const std::vector<std::size_t> weak_indices =
        mh::weak_test_indices(ds.test, originals, ds.task, cfg.weakness);

    json instances = json::array();
    for (std::size_t k = 0; k < originals.instances.size(); ++k) {
        const mh::TinyModel& model = originals.instances[k];
        json row;
        row["file"] = "instance_" + two_digits(static_cast<int>(k)) + ".mfm";
        row["fingerprint"] = hex_u64(model.fingerprint());
        row["quality_train"] = mh::quality_metric(model, ds.train);
        row["quality_test"] = mh::quality_metric(model, ds.test);
        if (ds.task == mh::Task::regression) {
            row["mean_angular_error"] = mh::mean_angular_error(model, ds.test);
        }
        instances.push_back(row);
    }

    json manifest;
    manifest["schema_version"] = 1;
    manifest["subject"] = cfg.subject;
    manifest["n"] = cfg.harness.n;
    manifest["o"] = cfg.harness.o;
    manifest["m"] = cfg.harness.m;
    manifest["base_seed"] = cfg.harness.base_seed;
    manifest["dataset_hash"] = hex_u64(mh::dataset_hash(ds));
    manifest["train"] = {{"hidden_sizes", cfg.harness.train.hidden_sizes},
                         {"activations", cfg.harness.train.activations},
                         {"epochs", cfg.harness.train.epochs},
                         {"learning_rate", cfg.harness.train.learning_rate},
                         {"batch_size", cfg.harness.train.batch_size},
                         {"weight_init", cfg.harness.train.weight_init}};
    manifest["instances"] = instances;
    manifest["weak"] = {{"indices", weak_indices},
                        {"size", weak_indices.size()},
                        {"confidence_threshold", cfg.weakness.confidence_threshold},
                        {"use_all_instances", cfg.weakness.use_all_instances},
                        {"remove_fraction", cfg.weakness.remove_fraction}};
    write_json_file(manifest_path, manifest);
    write_timings(dir, {{"train", train_seconds}, {"total", total_timer.seconds()}});

    std::cout << "baseline: trained " << cfg.harness.n << " instance(s); weak test set keeps "
              << weak_indices.size() << " of " << ds.test.size() << " inputs\n";
    return kExitSuccess;
}

int cmd_mutants(const RunConfig& cfg, const CommandOptions& options) {
    Timer total_timer;
    const fs::path dir = mutants_dir(cfg);
    const fs::path manifest_path = dir / "manifest.json";
    if (fs::exists(manifest_path) && !options.force) {
        std::cerr << "mutants: " << manifest_path.string()
                  << " already exists; pass --force to rebuild\n";
        return kExitFailure;
    }
    BaselineContext base = load_baseline(cfg);
    fs::create_directories(dir);

    MutantCache cache(base.ds, cfg);
    const stats::RankTest rank = cfg.harness.rank_test;
    const auto verdict = [&](const mh::MutationSpec& mu, const mh::DataSplit& split) {
        const MutantBuild& built = cache.build(mu);
        if (built.diverged) {
            return true;
        }
        return assess_kill(base.originals.instances, built.instances, split, rank).killed;
    };

    json operators = json::array();
    std::size_t target_count = 0;
    for (const OperatorConfig& op : cfg.operators) {
        const bool continuous = mh::is_continuous_operator(op.op);
        json entry;
        entry["op"] = op.op;
        entry["kind"] = continuous ? "continuous" : "discrete";
        entry["targets"] = json::array();

        if (continuous) {
            const analysis::OperatorSearchResult train_result = analysis::binary_search_config(
                op.op,
                [&](double theta) {
                    return verdict(continuous_spec(op, cfg.harness.train, theta), base.ds.train);
                },
                op.lo, op.hi, op.epsilon);
            entry["train_search"] = continuous_result_json(train_result);
            const bool equivalent = analysis::likely_equivalent(train_result);
            entry["likely_equivalent"] = equivalent;
            if (!equivalent) {
                const analysis::OperatorSearchResult weak_result = analysis::binary_search_config(
                    op.op,
                    [&](double theta) {
                        return verdict(continuous_spec(op, cfg.harness.train, theta), base.weak);
                    },
                    op.lo, op.hi, op.epsilon);
                entry["weak_search"] = continuous_result_json(weak_result);
                entry["weak_killing_probability"] =
                    analysis::mutation_score(weak_result, train_result);
                if (!weak_result.all_killed) {
                    // The most aggressive configuration the weak set fails to
                    // kill becomes the input-generation target.
                    const double theta = weak_result.boundary;
                    const mh::MutationSpec mu = continuous_spec(op, cfg.harness.train, theta);
                    const std::string rel = "targets/" + sanitize_target_id(op.op);
                    save_instance_models(dir / rel, cache.build(mu).instances);
                    entry["targets"].push_back(
                        json{{"id", op.op}, {"param", theta}, {"dir", rel}});
                    ++target_count;
                }
            }
        } else {
            const analysis::OperatorSearchResult train_result = analysis::exhaustive_search(
                op.op, op.values, [&](const std::string& value) {
                    return verdict(discrete_spec(op, value), base.ds.train);
                });
            entry["train_search"] = discrete_result_json(train_result);
            const bool equivalent = analysis::likely_equivalent(train_result);
            entry["likely_equivalent"] = equivalent;
            if (!equivalent) {
                const analysis::OperatorSearchResult weak_result = analysis::exhaustive_search(
                    op.op, op.values, [&](const std::string& value) {
                        return verdict(discrete_spec(op, value), base.weak);
                    });
                entry["weak_search"] = discrete_result_json(weak_result);
                entry["weak_killing_probability"] =
                    analysis::mutation_score(weak_result, train_result);
                const std::set<std::string> weak_killed(weak_result.killed_set.begin(),
                                                        weak_result.killed_set.end());
                for (const std::string& value : train_result.killed_set) {
                    if (weak_killed.count(value) != 0) {
                        continue;
                    }
                    const std::string id = op.op + ":" + value;
                    const std::string rel = "targets/" + sanitize_target_id(id);
                    save_instance_models(dir / rel, cache.build(discrete_spec(op, value)).instances);
                    entry["targets"].push_back(json{{"id", id}, {"value", value}, {"dir", rel}});
                    ++target_count;
                }
            }
        }

        std::cout << "mutants: " << op.op << ": "
                  << (entry.at("likely_equivalent").get<bool>()
                          ? std::string("likely equivalent (training set killed nothing)")
                          : std::to_string(entry.at("targets").size()) +
                                " surviving target(s)")
                  << "\n";
        operators.push_back(std::move(entry));
    }

    json manifest;
    manifest["schema_version"] = 1;
    manifest["subject"] = cfg.subject;
    manifest["dataset_hash"] = hex_u64(mh::dataset_hash(base.ds));
    manifest["operators"] = operators;
    manifest["target_count"] = target_count;
    write_json_file(manifest_path, manifest);
    write_timings(dir, {{"total", total_timer.seconds()}});

    if (target_count == 0) {
        std::cerr << "mutants: every operator is likely-equivalent or already killed by the "
                     "weak test set; nothing to augment\n";
        return kExitNoTargets;
    }
    std::cout << "mutants: " << target_count << " non-killed target configuration(s)\n";
    return kExitSuccess;
}

int cmd_augment(const RunConfig& cfg, const CommandOptions& options) {
    Timer total_timer;
    BaselineContext base = load_baseline(cfg);
    const json mutants_manifest = read_manifest(mutants_dir(cfg));
    std::vector<TargetInfo> targets = collect_targets(cfg, mutants_manifest);
    if (options.target) {
        std::vector<TargetInfo> filtered;
        for (TargetInfo& t : targets) {
            if (t.id == *options.target) {
                filtered.push_back(std::move(t));
            }
        }
        if (filtered.empty()) {
            throw MissingArtifactError("augment: target '" + *options.target +
                                       "' is not in the mutants manifest; run `metisforge "
                                       "mutants` or check the id");
        }
        targets = std::move(filtered);
    }
    if (targets.empty()) {
        std::cerr << "augment: no surviving target configurations to attack\n";
        return kExitNoTargets;
    }

    fs::create_directories(augment_dir(cfg));
    const std::vector<std::uint64_t> seeds =
        ensure_run_seeds(cfg, augment_dir(cfg), options.force);

    std::vector<search::SeedEntry<search::DigitSearchDomain>> digit_corpus;
    std::vector<search::SeedEntry<search::GazeSearchDomain>> gaze_corpus;
    if (cfg.is_digits()) {
        digit_corpus = load_digit_corpus(cfg);
    } else {
        gaze_corpus = load_gaze_corpus(cfg);
    }

    mh::ModelInstanceSet search_originals;
    search_originals.instances.assign(
        base.originals.instances.begin(),
        base.originals.instances.begin() + cfg.harness.o);
    search_originals.base_seed = cfg.harness.base_seed;

    MutantCache cache(base.ds, cfg);

    for (const TargetInfo& target : targets) {
        Timer target_timer;
        const fs::path tdir = target_augment_dir(cfg, target.id);
        fs::create_directories(tdir);

        const std::vector<mh::TinyModel> target_models =
            load_instance_models(target.instance_dir, cfg.harness.n);
        mh::ModelInstanceSet search_mutants;
        search_mutants.instances.assign(target_models.begin(),
                                        target_models.begin() + cfg.harness.m);
        search_mutants.base_seed = cfg.harness.base_seed + kMutantSeedOffset;

        json run_rows = json::array();
        for (int r = 0; r < cfg.run_count; ++r) {
            const fs::path rdir = tdir / run_dir_name(r);
            const fs::path rmanifest = rdir / "manifest.json";
            if (fs::exists(rmanifest) && !options.force) {
                run_rows.push_back(read_json_file(rmanifest));
                std::cout << "augment: " << target.id << " run " << r
                          << ": already complete, skipping\n";
                continue;
            }
            fs::create_directories(rdir);

            RunProducts products =
                cfg.is_digits()
                    ? execute_digit_run(cfg, seeds[static_cast<std::size_t>(r)], rdir,
                                        digit_corpus, search_originals, search_mutants)
                    : execute_gaze_run(cfg, seeds[static_cast<std::size_t>(r)], gaze_corpus,
                                       search_originals, search_mutants);
            write_run_log(rdir / "log.ndjson", products.log);

            mh::DataSplit augmented = base.weak;
            append_rows(augmented, products.archive_rows, base.ds.task);

            const stats::KillOutcome kill = assess_kill(base.originals.instances, target_models,
                                                        augmented, cfg.harness.rank_test);

            json rm;
            rm["schema_version"] = 1;
            rm["run"] = r;
            rm["seed"] = seeds[static_cast<std::size_t>(r)];
            rm["archive_size"] = products.archive_rows.size();
            rm["augmented_inputs"] = augmented.size();
            rm["archive"] = products.archive_entries;
            if (!cfg.is_digits()) {
                rm["noise_seed"] = products.noise_seed;
            }
            rm["assessment"] = {{"p_value", kill.p_value},
                                {"effect_size", format_double(kill.effect_size)},
                                {"killed", kill.killed}};

            double outcome = 0.0;
            if (target.kind == analysis::SearchKind::continuous) {
                const analysis::OperatorSearchResult aug_result = analysis::binary_search_config(
                    target.op.op,
                    [&](double theta) {
                        const mh::MutationSpec mu =
                            continuous_spec(target.op, cfg.harness.train, theta);
                        const MutantBuild& built = cache.build(mu);
                        if (built.diverged) {
                            return true;
                        }
                        return assess_kill(base.originals.instances, built.instances,
                                           augmented, cfg.harness.rank_test)
                            .killed;
                    },
                    target.op.lo, target.op.hi, target.op.epsilon);
                outcome = analysis::mutation_score(aug_result, target.train_result);
                rm["augmented_search"] = continuous_result_json(aug_result);
            } else {
                outcome = kill.killed ? 1.0 : 0.0;
            }
            rm["killing_probability"] = outcome;

            // The manifest lands last: its presence marks the run complete,
            // so an interrupted run is simply redone on resume.
            write_json_file(rmanifest, rm);
            run_rows.push_back(rm);
            std::cout << "augment: " << target.id << " run " << r << ": archive "
                      << products.archive_rows.size() << ", "
                      << (kill.killed ? "killed" : "not killed")
                      << ", killing probability " << format_double(outcome) << "\n";
        }

        json report;
        report["schema_version"] = 1;
        report["target"] = target.id;
        report["op"] = target.op.op;
        report["kind"] =
            target.kind == analysis::SearchKind::continuous ? "continuous" : "discrete";
        report["config"] = target.kind == analysis::SearchKind::continuous ? json(target.param)
                                                                           : json(target.value);
        report["fitness_config"] = "1vs" + std::to_string(cfg.harness.m);
        report["weak_killing_probability"] = target.weak_k;
        report["run_count"] = cfg.run_count;

        json runs = json::array();
        int runs_killed = 0;
        int runs_improved = 0;
        double sum_archive = 0.0;
        double sum_inputs = 0.0;
        std::vector<double> outcomes;
        for (const json& rm : run_rows) {
            const bool killed = rm.at("assessment").at("killed").get<bool>();
            const double outcome = rm.at("killing_probability").get<double>();
            runs.push_back(json{{"run", rm.at("run")},
                                {"seed", rm.at("seed")},
                                {"archive_size", rm.at("archive_size")},
                                {"augmented_inputs", rm.at("augmented_inputs")},
                                {"killed", killed},
                                {"killing_probability", outcome}});
            if (killed) {
                ++runs_killed;
            }
            const bool improved = target.kind == analysis::SearchKind::continuous
                                      ? outcome > target.weak_k
                                      : killed;
            if (improved) {
                ++runs_improved;
            }
            outcomes.push_back(outcome);
            sum_archive += rm.at("archive_size").get<double>();
            sum_inputs += rm.at("augmented_inputs").get<double>();
        }
        report["runs"] = runs;
        report["runs_killed"] = runs_killed;
        report["runs_improved"] = runs_improved;
        report["mean_archive_size"] = sum_archive / static_cast<double>(cfg.run_count);
        report["mean_augmented_inputs"] = sum_inputs / static_cast<double>(cfg.run_count);
        report["mean_killing_probability"] =
            analysis::killing_probability(target.kind, outcomes);
        write_json_file(tdir / "report.json", report);
        write_timings(tdir, {{"total", target_timer.seconds()}});

        std::cout << "augment: " << target.id << ": killed in " << runs_killed << "/"
                  << cfg.run_count << " run(s), mean killing probability "
                  << format_double(report.at("mean_killing_probability").get<double>()) << "\n";
    }

    write_timings(augment_dir(cfg), {{"total", total_timer.seconds()}});
    return kExitSuccess;
}

int cmd_crossval(const RunConfig& cfg, const CommandOptions& options) {
    (void)options;
    Timer total_timer;
    BaselineContext base = load_baseline(cfg);
    const json mutants_manifest = read_manifest(mutants_dir(cfg));
    const std::vector<TargetInfo> targets = collect_targets(cfg, mutants_manifest);

    std::set<std::string> ops;
    for (const TargetInfo& t : targets) {
        ops.insert(t.op.op);
    }
    if (ops.size() < 2) {
        std::cerr << "crossval: needs surviving targets from at least two operators; found "
                  << ops.size() << "\n";
        return kExitNoTargets;
    }

    bool any_complete = false;
    for (const TargetInfo& t : targets) {
        if (augment_complete(cfg, t)) {
            any_complete = true;
            break;
        }
    }
    if (!any_complete) {
        throw MissingArtifactError(
            "crossval: no completed augmentation runs found; run `metisforge augment` first");
    }

    json rows = json::array();
    std::vector<std::vector<std::string>> csv_rows;
    for (const TargetInfo& target : targets) {
        std::vector<const TargetInfo*> donors;
        for (const TargetInfo& donor : targets) {
            if (donor.op.op != target.op.op && augment_complete(cfg, donor)) {
                donors.push_back(&donor);
            }
        }
        json row;
        row["mo"] = target.id;
        row["run_count"] = cfg.run_count;
        if (donors.empty()) {
            row["skipped"] = true;
            rows.push_back(std::move(row));
            csv_rows.push_back({target.id, "", "", std::to_string(cfg.run_count), "yes"});
            std::cout << "crossval: " << target.id
                      << ": skipped (no completed donors from other operators)\n";
            continue;
        }

        const std::vector<mh::TinyModel> target_models =
            load_instance_models(target.instance_dir, cfg.harness.n);
        json donor_ids = json::array();
        for (const TargetInfo* donor : donors) {
            donor_ids.push_back(donor->id);
        }

        int killed_runs = 0;
        double input_sum = 0.0;
        for (int r = 0; r < cfg.run_count; ++r) {
            mh::DataSplit pool = base.weak;
            for (const TargetInfo* donor : donors) {
                const fs::path rdir = target_augment_dir(cfg, donor->id) / run_dir_name(r);
                const json rm = read_json_file(rdir / "manifest.json");
                const mh::DataSplit donor_rows =
                    cfg.is_digits()
                        ? load_digit_archive_rows(rdir / "archive", rm.at("archive"))
                        : load_gaze_archive_rows(rm.at("archive"),
                                                 rm.at("noise_seed").get<std::uint64_t>());
                append_rows(pool, donor_rows, base.ds.task);
            }
            input_sum += static_cast<double>(pool.size());
            if (assess_kill(base.originals.instances, target_models, pool, cfg.harness.rank_test)
                    .killed) {
                ++killed_runs;
            }
        }
        const double mean_inputs = input_sum / static_cast<double>(cfg.run_count);
        row["skipped"] = false;
        row["donors"] = donor_ids;
        row["killed_runs"] = killed_runs;
        row["mean_inputs"] = mean_inputs;
        rows.push_back(std::move(row));
        csv_rows.push_back({target.id, format_double(mean_inputs),
                            std::to_string(killed_runs) + "/" + std::to_string(cfg.run_count),
                            std::to_string(cfg.run_count), "no"});
        std::cout << "crossval: " << target.id << ": killed by held-out inputs in "
                  << killed_runs << "/" << cfg.run_count << " run(s)\n";
    }

    fs::create_directories(crossval_dir(cfg));
    write_csv_file(crossval_dir(cfg) / "crossval.csv",
                   {"mo", "inputs", "killed", "run_count", "skipped"}, csv_rows);
    write_json_file(crossval_dir(cfg) / "report.json",
                    json{{"schema_version", 1}, {"rows", rows}});
    write_timings(crossval_dir(cfg), {{"total", total_timer.seconds()}});
    return kExitSuccess;
}

int cmd_report(const RunConfig& cfg, const CommandOptions& options) {
    (void)options;
    std::vector<std::string> missing;
    const fs::path bpath = baseline_dir(cfg) / "manifest.json";
    const fs::path mpath = mutants_dir(cfg) / "manifest.json";
    if (!fs::exists(bpath)) {
        missing.push_back(bpath.string() + " (run `metisforge baseline`)");
    }
    json mutants_manifest;
    std::vector<TargetInfo> targets;
    if (!fs::exists(mpath)) {
        missing.push_back(mpath.string() + " (run `metisforge mutants`)");
    } else {
        mutants_manifest = read_json_file(mpath);
        targets = collect_targets(cfg, mutants_manifest);
        for (const TargetInfo& t : targets) {
            const fs::path rpath = target_augment_dir(cfg, t.id) / "report.json";
            if (!fs::exists(rpath)) {
                missing.push_back(rpath.string() + " (run `metisforge augment`)");
            }
        }
    }
    if (!missing.empty()) {
        std::cerr << "report: missing required artifacts:\n";
        for (const std::string& item : missing) {
            std::cerr << "  - " << item << "\n";
        }
        return kExitMissingArtifacts;
    }

    std::vector<std::vector<std::string>> csv_rows;
    json op_rows = json::array();
    json runtimes = json::object();
    for (const json& entry : mutants_manifest.at("operators")) {
        const std::string opname = entry.at("op").get<std::string>();
        const std::string kind = entry.at("kind").get<std::string>();
        if (entry.at("likely_equivalent").get<bool>()) {
            csv_rows.push_back({opname, kind, "", "likely_equivalent", "", "", "", "", ""});
            op_rows.push_back(
                json{{"op", opname}, {"kind", kind}, {"status", "likely_equivalent"}});
            continue;
        }
        const double weak_k = entry.at("weak_killing_probability").get<double>();
        if (entry.at("targets").empty()) {
            csv_rows.push_back({opname, kind, "", "fully_killed_by_weak_set",
                                format_double(weak_k), "", "", "", ""});
            op_rows.push_back(json{{"op", opname},
                                   {"kind", kind},
                                   {"status", "fully_killed_by_weak_set"},
                                   {"weak_killing_probability", weak_k}});
            continue;
        }
        for (const json& t : entry.at("targets")) {
            const std::string id = t.at("id").get<std::string>();
            const fs::path tdir = target_augment_dir(cfg, id);
            const json rep = read_json_file(tdir / "report.json");
            const std::string config = kind == "continuous"
                                           ? format_double(t.at("param").get<double>())
                                           : t.at("value").get<std::string>();
            const int run_count = rep.at("run_count").get<int>();
            csv_rows.push_back(
                {id, kind, config, "augmented", format_double(weak_k),
                 format_double(rep.at("mean_killing_probability").get<double>()),
                 std::to_string(rep.at("runs_killed").get<int>()) + "/" +
                     std::to_string(run_count),
                 std::to_string(rep.at("runs_improved").get<int>()) + "/" +
                     std::to_string(run_count),
                 format_double(rep.at("mean_augmented_inputs").get<double>())});
            op_rows.push_back(json{{"op", opname},
                                   {"kind", kind},
                                   {"target", id},
                                   {"status", "augmented"},
                                   {"config", kind == "continuous" ? json(t.at("param"))
                                                                   : json(t.at("value"))},
                                   {"weak_killing_probability", weak_k},
                                   {"mean_killing_probability",
                                    rep.at("mean_killing_probability")},
                                   {"runs_killed", rep.at("runs_killed")},
                                   {"runs_improved", rep.at("runs_improved")},
                                   {"run_count", run_count},
                                   {"mean_archive_size", rep.at("mean_archive_size")},
                                   {"mean_augmented_inputs", rep.at("mean_augmented_inputs")}});
            const fs::path timing_path = tdir / "timings.json";
            if (fs::exists(timing_path)) {
                const json timing = read_json_file(timing_path);
                runtimes[id] =
                    timing.value("total", 0.0) / static_cast<double>(std::max(1, run_count));
            }
        }
    }

    json summary;
    summary["schema_version"] = 1;
    summary["subject"] = cfg.subject;
    summary["operators"] = op_rows;
    const fs::path crossval_report = crossval_dir(cfg) / "report.json";
    if (fs::exists(crossval_report)) {
        summary["crossval"] = read_json_file(crossval_report);
    }

    fs::create_directories(report_dir(cfg));
    write_csv_file(report_dir(cfg) / "summary.csv",
                   {"target", "kind", "config", "status", "weak_k", "augmented_k_mean",
                    "runs_killed", "runs_improved", "mean_inputs"},
                   csv_rows);
    write_json_file(report_dir(cfg) / "summary.json", summary);
    // Mean per-run wall-clock seconds; informational only, so it lives in its
    // own file and never participates in byte-level comparisons.
    write_json_file(report_dir(cfg) / "runtimes.json", runtimes);

    std::cout << "report: " << csv_rows.size() << " row(s) -> "
              << (report_dir(cfg) / "summary.csv").string() << "\n";
    for (const std::vector<std::string>& row : csv_rows) {
        std::cout << "  " << row[0] << " [" << row[1] << "] " << row[3];
        if (!row[4].empty()) {
            std::cout << ": weak " << row[4];
        }
        if (!row[5].empty()) {
            std::cout << " -> augmented " << row[5] << " (killed " << row[6] << ")";
        }
        std::cout << "\n";
    }
    return kExitSuccess;
}

int run_command(const std::string& command, const RunConfig& cfg,
                const CommandOptions& options) {
    try {
        if (command == "baseline") {
            return cmd_baseline(cfg, options);
        }
        if (command == "mutants") {
            return cmd_mutants(cfg, options);
        }
        if (command == "augment") {
            return cmd_augment(cfg, options);
        }
        if (command == "crossval") {
            return cmd_crossval(cfg, options);
        }
        if (command == "report") {
            return cmd_report(cfg, options);
        }
        std::cerr << "unknown command '" << command << "'\n";
        return kExitFailure;
    } catch (const MissingArtifactError& e) {
        std::cerr << e.what() << "\n";
        return kExitMissingArtifacts;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}

} // namespace metisforge::cli
