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

#include "metisforge/cli/run_config.hpp"

#include <initializer_list>
#include <stdexcept>

#include "json.hpp"

#include "metisforge/common/text.hpp"
#include "metisforge/harness/mutation.hpp"

namespace metisforge::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) {
    throw std::runtime_error("config: " + message);
}

void expect_keys(const json& obj, const std::string& where,
                 std::initializer_list<const char*> allowed) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed) {
            if (item.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) {
            fail("unknown key '" + item.key() + "' in " + where);
        }
    }
}

const json& require(const json& obj, const std::string& where, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        fail("missing key '" + std::string(key) + "' in " + where);
    }
    return *it;
}

template <typename T>
T get_or(const json& obj, const char* key, T fallback) {
    const auto it = obj.find(key);
    if (it == obj.end()) {
        return fallback;
    }
    return it->get<T>();
}

void parse_harness(const json& obj, HarnessConfig& harness, metisforge::harness::Task task) {
    expect_keys(obj, "harness",
                {"n", "o", "m", "base_seed", "rank_test", "train"});
    harness.n = get_or(obj, "n", harness.n);
    harness.o = get_or(obj, "o", harness.o);
    harness.m = get_or(obj, "m", harness.m);
    harness.base_seed = get_or<std::uint64_t>(obj, "base_seed", harness.base_seed);
    const std::string rank_test = get_or<std::string>(obj, "rank_test", "unpaired");
    if (rank_test == "unpaired") {
        harness.rank_test = stats::RankTest::unpaired;
    } else if (rank_test == "paired") {
        harness.rank_test = stats::RankTest::paired;
    } else {
        fail("rank_test must be 'unpaired' or 'paired'");
    }
    if (obj.contains("train")) {
        const json& train = obj.at("train");
        expect_keys(train, "harness.train",
                    {"hidden_sizes", "activations", "epochs", "learning_rate", "batch_size",
                     "weight_init"});
        harness.train.hidden_sizes =
            get_or(train, "hidden_sizes", harness.train.hidden_sizes);
        harness.train.activations =
            get_or(train, "activations", harness.train.activations);
        harness.train.epochs = get_or(train, "epochs", harness.train.epochs);
        harness.train.learning_rate =
            get_or(train, "learning_rate", harness.train.learning_rate);
        harness.train.batch_size = get_or(train, "batch_size", harness.train.batch_size);
        harness.train.weight_init =
            get_or(train, "weight_init", harness.train.weight_init);
    }
    harness.train.task = task;
}

void parse_search(const json& obj, RunConfig& cfg) {
    expect_keys(obj, "search",
                {"popsize", "g_max", "repop_upper_bound", "rng_seed", "mutation_extent",
                 "archive_threshold"});
    cfg.search.popsize = get_or(obj, "popsize", cfg.search.popsize);
    cfg.search.g_max = get_or(obj, "g_max", cfg.search.g_max);
    cfg.search.repop_upper_bound =
        get_or(obj, "repop_upper_bound", cfg.search.repop_upper_bound);
    cfg.search.rng_seed = get_or<std::uint64_t>(obj, "rng_seed", cfg.search.rng_seed);
    if (obj.contains("mutation_extent")) {
        const json& extent = obj.at("mutation_extent");
        if (!extent.is_array() || extent.size() != 2) {
            fail("search.mutation_extent must be a [lo, hi] pair");
        }
        cfg.mutation_extent_lo = extent[0].get<double>();
        cfg.mutation_extent_hi = extent[1].get<double>();
    }
    cfg.archive_threshold = get_or(obj, "archive_threshold", cfg.archive_threshold);
}

void parse_weakness(const json& obj, metisforge::harness::WeakSetOptions& weakness) {
    expect_keys(obj, "weakness",
                {"confidence_threshold", "use_all_instances", "remove_fraction"});
    weakness.confidence_threshold =
        get_or(obj, "confidence_threshold", weakness.confidence_threshold);
    weakness.use_all_instances =
        get_or(obj, "use_all_instances", weakness.use_all_instances);
    weakness.remove_fraction = get_or(obj, "remove_fraction", weakness.remove_fraction);
}

OperatorConfig parse_operator(const json& obj, std::size_t index) {
    const std::string where = "operators[" + std::to_string(index) + "]";
    expect_keys(obj, where,
                {"op", "lo", "hi", "epsilon", "target_label", "second_label", "values"});
    OperatorConfig op;
    op.op = require(obj, where, "op").get<std::string>();
    op.lo = get_or(obj, "lo", op.lo);
    op.hi = get_or(obj, "hi", op.hi);
    op.epsilon = get_or(obj, "epsilon", op.epsilon);
    op.target_label = get_or(obj, "target_label", op.target_label);
    op.second_label = get_or(obj, "second_label", op.second_label);
    op.values = get_or(obj, "values", op.values);
    return op;
}

} // namespace

RunConfig load_run_config(const std::filesystem::path& file) {
    json root;
    try {
        root = json::parse(read_text_file(file));
    } catch (const json::parse_error& e) {
        fail(file.string() + ": " + e.what());
    }
    if (!root.is_object()) {
        fail(file.string() + ": top level must be an object");
    }
    expect_keys(root, "top level",
                {"schema_version", "subject", "dataset", "seeds", "output_dir", "run_count",
                 "harness", "search", "weakness", "operators"});
    const int version = require(root, "top level", "schema_version").get<int>();
    if (version != kConfigSchemaVersion) {
        fail("unsupported schema_version " + std::to_string(version) + " (expected " +
             std::to_string(kConfigSchemaVersion) + ")");
    }

    RunConfig cfg;
    cfg.subject = require(root, "top level", "subject").get<std::string>();
    if (cfg.subject != "digits" && cfg.subject != "regression") {
        fail("subject must be 'digits' or 'regression'");
    }
    cfg.dataset = require(root, "top level", "dataset").get<std::string>();
    cfg.seeds = require(root, "top level", "seeds").get<std::string>();
    cfg.output_dir = require(root, "top level", "output_dir").get<std::string>();
    cfg.run_count = get_or(root, "run_count", cfg.run_count);

    if (!cfg.is_digits()) {
        // Per-subject sizing defaults; explicit keys below still win.
        cfg.search.popsize = 12;
        cfg.search.g_max = 40;
        cfg.search.repop_upper_bound = 2;
    }
    if (root.contains("harness")) {
        parse_harness(root.at("harness"), cfg.harness, cfg.task());
    } else {
        cfg.harness.train.task = cfg.task();
    }
    if (root.contains("search")) {
        parse_search(root.at("search"), cfg);
    }
    if (root.contains("weakness")) {
        parse_weakness(root.at("weakness"), cfg.weakness);
    }
    const json& operators = require(root, "top level", "operators");
    if (!operators.is_array()) {
        fail("operators must be an array");
    }
    for (std::size_t i = 0; i < operators.size(); ++i) {
        cfg.operators.push_back(parse_operator(operators[i], i));
    }

    validate(cfg);
    return cfg;
}

void validate(const RunConfig& cfg) {
    namespace mh = metisforge::harness;
    if (cfg.harness.n < 3) {
        fail("harness.n must be at least 3 (the kill statistics need it)");
    }
    if (cfg.harness.o < 1 || cfg.harness.o > cfg.harness.n) {
        fail("harness.o must lie in [1, n]");
    }
    if (cfg.harness.m < 1 || cfg.harness.m > cfg.harness.n) {
        fail("harness.m must lie in [1, n]");
    }
    if (cfg.run_count < 1) {
        fail("run_count must be positive");
    }
    metisforge::search::validate(cfg.search);
    mh::validate(cfg.harness.train);
    if (!(cfg.mutation_extent_lo > 0.0 && cfg.mutation_extent_lo <= cfg.mutation_extent_hi)) {
        fail("search.mutation_extent needs 0 < lo <= hi");
    }
    if (!(cfg.archive_threshold >= 0.0)) {
        fail("search.archive_threshold must be nonnegative");
    }
    if (!(cfg.weakness.confidence_threshold >= 0.0 &&
          cfg.weakness.confidence_threshold <= 1.0)) {
        fail("weakness.confidence_threshold must lie in [0, 1]");
    }
    if (!(cfg.weakness.remove_fraction >= 0.0 && cfg.weakness.remove_fraction <= 1.0)) {
        fail("weakness.remove_fraction must lie in [0, 1]");
    }

    for (const OperatorConfig& op : cfg.operators) {
        if (!mh::is_known_operator(op.op)) {
            fail("unknown operator '" + op.op + "'");
        }
        if (mh::is_continuous_operator(op.op)) {
            if (!(op.epsilon > 0.0) || !(op.lo < op.hi)) {
                fail(op.op + ": need lo < hi and epsilon > 0");
            }
            if (mh::is_percentage_operator(op.op) && (op.lo < 0.0 || op.hi > 0.99)) {
                fail(op.op + ": percentage range must stay within [0, 0.99]");
            }
            if (!mh::is_percentage_operator(op.op) && (op.lo < 0.0 || op.hi > 1.0)) {
                fail(op.op + ": aggressiveness range must stay within [0, 1]");
            }
            if (!op.values.empty()) {
                fail(op.op + ": continuous operators take no 'values' list");
            }
        } else {
            if (op.values.empty()) {
                fail(op.op + ": discrete operators need a non-empty 'values' list");
            }
        }
        const bool needs_target = op.op == "TCL" || op.op == "TUD" || op.op == "TCO";
        if (needs_target && op.target_label < 0) {
            fail(op.op + ": needs target_label");
        }
        if (op.op == "TCO" && op.second_label < 0) {
            fail(op.op + ": needs second_label");
        }
    }
}

void apply_full_scale(RunConfig& cfg) {
    if (cfg.is_digits()) {
        cfg.search.popsize = 100;
        cfg.search.g_max = 1000;
        cfg.search.repop_upper_bound = 10;
    } else {
        cfg.search.popsize = 12;
        cfg.search.g_max = 100;
        cfg.search.repop_upper_bound = 2;
    }
}

} // namespace metisforge::cli
