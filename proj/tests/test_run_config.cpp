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

#include <filesystem>
#include <stdexcept>
#include <string>

#include <gtest/gtest.h>

#include "json.hpp"
#include "metisforge/common/text.hpp"
#include "test_support.hpp"

namespace metisforge::cli {
namespace {

using nlohmann::json;

json minimal_config(const std::string& subject) {
    return json{
        {"schema_version", kConfigSchemaVersion},
        {"subject", subject},
        {"dataset", "data.mfd"},
        {"seeds", "seed_dir"},
        {"output_dir", "out"},
        {"operators", json::array()},
    };
}

class RunConfigTest : public ::testing::Test {
  protected:
    std::filesystem::path write_config(const json& cfg) {
        const auto path = dir_.path() / ("cfg_" + std::to_string(counter_++) + ".json");
        write_text_file(path, cfg.dump(2) + "\n");
        return path;
    }

    RunConfig load(const json& cfg) { return load_run_config(write_config(cfg)); }

    // Loads an intentionally broken config and returns the error text.
    std::string load_error(const json& cfg) {
        try {
            load_run_config(write_config(cfg));
        } catch (const std::runtime_error& e) {
            return e.what();
        }
        ADD_FAILURE() << "expected load_run_config to throw for:\n" << cfg.dump(2);
        return {};
    }

    static void expect_contains(const std::string& message, const std::string& fragment) {
        EXPECT_NE(message.find(fragment), std::string::npos)
            << "message was: \"" << message << "\"\nexpected fragment: \"" << fragment << "\"";
    }

    test::TempDir dir_{"run_config"};
    int counter_ = 0;
};

TEST_F(RunConfigTest, MinimalDigitsConfigUsesDeskDefaults) {
    const RunConfig cfg = load(minimal_config("digits"));

    EXPECT_EQ(cfg.subject, "digits");
    EXPECT_TRUE(cfg.is_digits());
    EXPECT_EQ(cfg.task(), harness::Task::classification);
    EXPECT_EQ(cfg.dataset, std::filesystem::path("data.mfd"));
    EXPECT_EQ(cfg.seeds, std::filesystem::path("seed_dir"));
    EXPECT_EQ(cfg.output_dir, std::filesystem::path("out"));
    EXPECT_EQ(cfg.run_count, 10);

    EXPECT_EQ(cfg.harness.n, 6);
    EXPECT_EQ(cfg.harness.o, 1);
    EXPECT_EQ(cfg.harness.m, 5);
    EXPECT_EQ(cfg.harness.base_seed, 2026u);
    EXPECT_EQ(cfg.harness.rank_test, stats::RankTest::unpaired);
    EXPECT_TRUE(cfg.harness.train.hidden_sizes.empty());
    EXPECT_TRUE(cfg.harness.train.activations.empty());
    EXPECT_EQ(cfg.harness.train.epochs, 1);
    EXPECT_DOUBLE_EQ(cfg.harness.train.learning_rate, 0.01);
    EXPECT_EQ(cfg.harness.train.batch_size, 32);
    EXPECT_EQ(cfg.harness.train.weight_init, "he_uniform");
    EXPECT_EQ(cfg.harness.train.task, harness::Task::classification);

    EXPECT_EQ(cfg.search.popsize, 24);
    EXPECT_EQ(cfg.search.g_max, 50);
    EXPECT_EQ(cfg.search.repop_upper_bound, 10);
    EXPECT_EQ(cfg.search.rng_seed, 0u);
    EXPECT_DOUBLE_EQ(cfg.mutation_extent_lo, 1.0);
    EXPECT_DOUBLE_EQ(cfg.mutation_extent_hi, 3.0);
    EXPECT_DOUBLE_EQ(cfg.archive_threshold, 0.55);

    EXPECT_DOUBLE_EQ(cfg.weakness.confidence_threshold, 1.0 - 1e-6);
    EXPECT_FALSE(cfg.weakness.use_all_instances);
    EXPECT_DOUBLE_EQ(cfg.weakness.remove_fraction, 0.5);
    EXPECT_TRUE(cfg.operators.empty());
}

TEST_F(RunConfigTest, RegressionSubjectGetsSmallerSizingDefaults) {
    const RunConfig cfg = load(minimal_config("regression"));

    EXPECT_FALSE(cfg.is_digits());
    EXPECT_EQ(cfg.task(), harness::Task::regression);
    EXPECT_EQ(cfg.harness.train.task, harness::Task::regression);
    EXPECT_EQ(cfg.search.popsize, 12);
    EXPECT_EQ(cfg.search.g_max, 40);
    EXPECT_EQ(cfg.search.repop_upper_bound, 2);
}

TEST_F(RunConfigTest, ExplicitSearchKeysOverrideSubjectDefaults) {
    json raw = minimal_config("regression");
    raw["search"] = json{{"popsize", 30}};
    const RunConfig cfg = load(raw);

    // The explicit key wins; untouched keys keep the regression sizing.
    EXPECT_EQ(cfg.search.popsize, 30);
    EXPECT_EQ(cfg.search.g_max, 40);
    EXPECT_EQ(cfg.search.repop_upper_bound, 2);
}

TEST_F(RunConfigTest, ParsesEveryConfigurableField) {
    json raw = minimal_config("digits");
    raw["run_count"] = 3;
    raw["harness"] = json{
        {"n", 4},
        {"o", 2},
        {"m", 2},
        {"base_seed", 99},
        {"rank_test", "paired"},
        {"train",
         json{
             {"hidden_sizes", json::array({16, 8})},
             {"activations", json::array({"relu", "tanh"})},
             {"epochs", 5},
             {"learning_rate", 0.1},
             {"batch_size", 8},
             {"weight_init", "small_gaussian"},
         }},
    };
    raw["search"] = json{
        {"popsize", 10},         {"g_max", 7},
        {"repop_upper_bound", 4}, {"rng_seed", 123},
        {"mutation_extent", json::array({0.5, 2.5})},
        {"archive_threshold", 0.9},
    };
    raw["weakness"] = json{
        {"confidence_threshold", 0.75},
        {"use_all_instances", true},
        {"remove_fraction", 0.25},
    };
    raw["operators"] = json::array({
        json{{"op", "TRD"}, {"lo", 0.1}, {"hi", 0.8}, {"epsilon", 0.05}},
        json{{"op", "TCL"}, {"target_label", 3}},
        json{{"op", "ACH"}, {"values", json::array({"0:sigmoid", "0:tanh"})}},
        json{{"op", "TCO"}, {"hi", 0.5}, {"target_label", 1}, {"second_label", 2}},
    });

    const RunConfig cfg = load(raw);

    EXPECT_EQ(cfg.run_count, 3);
    EXPECT_EQ(cfg.harness.n, 4);
    EXPECT_EQ(cfg.harness.o, 2);
    EXPECT_EQ(cfg.harness.m, 2);
    EXPECT_EQ(cfg.harness.base_seed, 99u);
    EXPECT_EQ(cfg.harness.rank_test, stats::RankTest::paired);
    ASSERT_EQ(cfg.harness.train.hidden_sizes.size(), 2u);
    EXPECT_EQ(cfg.harness.train.hidden_sizes[0], 16);
    EXPECT_EQ(cfg.harness.train.hidden_sizes[1], 8);
    ASSERT_EQ(cfg.harness.train.activations.size(), 2u);
    EXPECT_EQ(cfg.harness.train.activations[0], "relu");
    EXPECT_EQ(cfg.harness.train.activations[1], "tanh");
    EXPECT_EQ(cfg.harness.train.epochs, 5);
    EXPECT_DOUBLE_EQ(cfg.harness.train.learning_rate, 0.1);
    EXPECT_EQ(cfg.harness.train.batch_size, 8);
    EXPECT_EQ(cfg.harness.train.weight_init, "small_gaussian");

    EXPECT_EQ(cfg.search.popsize, 10);
    EXPECT_EQ(cfg.search.g_max, 7);
    EXPECT_EQ(cfg.search.repop_upper_bound, 4);
    EXPECT_EQ(cfg.search.rng_seed, 123u);
    EXPECT_DOUBLE_EQ(cfg.mutation_extent_lo, 0.5);
    EXPECT_DOUBLE_EQ(cfg.mutation_extent_hi, 2.5);
    EXPECT_DOUBLE_EQ(cfg.archive_threshold, 0.9);

    EXPECT_DOUBLE_EQ(cfg.weakness.confidence_threshold, 0.75);
    EXPECT_TRUE(cfg.weakness.use_all_instances);
    EXPECT_DOUBLE_EQ(cfg.weakness.remove_fraction, 0.25);

    ASSERT_EQ(cfg.operators.size(), 4u);
    EXPECT_EQ(cfg.operators[0].op, "TRD");
    EXPECT_DOUBLE_EQ(cfg.operators[0].lo, 0.1);
    EXPECT_DOUBLE_EQ(cfg.operators[0].hi, 0.8);
    EXPECT_DOUBLE_EQ(cfg.operators[0].epsilon, 0.05);
    EXPECT_EQ(cfg.operators[1].op, "TCL");
    EXPECT_EQ(cfg.operators[1].target_label, 3);
    EXPECT_DOUBLE_EQ(cfg.operators[1].lo, 0.0);   // defaulted
    EXPECT_DOUBLE_EQ(cfg.operators[1].hi, 0.99);  // defaulted
    EXPECT_EQ(cfg.operators[2].op, "ACH");
    ASSERT_EQ(cfg.operators[2].values.size(), 2u);
    EXPECT_EQ(cfg.operators[2].values[0], "0:sigmoid");
    EXPECT_EQ(cfg.operators[2].values[1], "0:tanh");
    EXPECT_EQ(cfg.operators[3].op, "TCO");
    EXPECT_EQ(cfg.operators[3].target_label, 1);
    EXPECT_EQ(cfg.operators[3].second_label, 2);
}

TEST_F(RunConfigTest, UnknownKeysAreRejectedAtEveryLevel) {
    json raw = minimal_config("digits");
    raw["note"] = "oops";
    expect_contains(load_error(raw), "unknown key 'note' in top level");

    raw = minimal_config("digits");
    raw["harness"] = json{{"instances", 6}};
    expect_contains(load_error(raw), "unknown key 'instances' in harness");

    raw = minimal_config("digits");
    raw["harness"] = json{{"train", json{{"momentum", 0.9}}}};
    expect_contains(load_error(raw), "unknown key 'momentum' in harness.train");

    raw = minimal_config("digits");
    raw["search"] = json{{"population", 24}};
    expect_contains(load_error(raw), "unknown key 'population' in search");

    raw = minimal_config("digits");
    raw["weakness"] = json{{"threshold", 0.9}};
    expect_contains(load_error(raw), "unknown key 'threshold' in weakness");

    raw = minimal_config("digits");
    raw["operators"] = json::array({json{{"op", "TRD"}, {"step", 0.1}}});
    expect_contains(load_error(raw), "unknown key 'step' in operators[0]");
}

TEST_F(RunConfigTest, MissingRequiredKeysAreRejected) {
    for (const char* key :
         {"schema_version", "subject", "dataset", "seeds", "output_dir", "operators"}) {
        json raw = minimal_config("digits");
        raw.erase(key);
        expect_contains(load_error(raw),
                        "missing key '" + std::string(key) + "' in top level");
    }
}

TEST_F(RunConfigTest, RejectsUnsupportedSchemaVersion) {
    json raw = minimal_config("digits");
    raw["schema_version"] = 2;
    expect_contains(load_error(raw), "unsupported schema_version 2 (expected 1)");
}

TEST_F(RunConfigTest, RejectsUnknownSubject) {
    expect_contains(load_error(minimal_config("audio")),
                    "subject must be 'digits' or 'regression'");
}

TEST_F(RunConfigTest, RejectsUnknownRankTest) {
    json raw = minimal_config("digits");
    raw["harness"] = json{{"rank_test", "wilcoxon"}};
    expect_contains(load_error(raw), "rank_test must be 'unpaired' or 'paired'");
}

TEST_F(RunConfigTest, RejectsMalformedMutationExtent) {
    json raw = minimal_config("digits");
    raw["search"] = json{{"mutation_extent", json::array({1.0})}};
    expect_contains(load_error(raw), "search.mutation_extent must be a [lo, hi] pair");

    raw = minimal_config("digits");
    raw["search"] = json{{"mutation_extent", 3.0}};
    expect_contains(load_error(raw), "search.mutation_extent must be a [lo, hi] pair");
}

TEST_F(RunConfigTest, RejectsNonArrayOperators) {
    json raw = minimal_config("digits");
    raw["operators"] = json::object();
    expect_contains(load_error(raw), "operators must be an array");
}

TEST_F(RunConfigTest, ValidateChecksHarnessAndSearchBounds) {
    json raw = minimal_config("digits");
    raw["harness"] = json{{"n", 2}};
    expect_contains(load_error(raw), "harness.n must be at least 3");

    raw = minimal_config("digits");
    raw["harness"] = json{{"o", 0}};
    expect_contains(load_error(raw), "harness.o must lie in [1, n]");

    raw = minimal_config("digits");
    raw["harness"] = json{{"o", 7}};
    expect_contains(load_error(raw), "harness.o must lie in [1, n]");

    raw = minimal_config("digits");
    raw["harness"] = json{{"m", 0}};
    expect_contains(load_error(raw), "harness.m must lie in [1, n]");

    raw = minimal_config("digits");
    raw["run_count"] = 0;
    expect_contains(load_error(raw), "run_count must be positive");

    raw = minimal_config("digits");
    raw["search"] = json{{"mutation_extent", json::array({0.0, 1.0})}};
    expect_contains(load_error(raw), "search.mutation_extent needs 0 < lo <= hi");

    raw = minimal_config("digits");
    raw["search"] = json{{"mutation_extent", json::array({2.0, 1.0})}};
    expect_contains(load_error(raw), "search.mutation_extent needs 0 < lo <= hi");

    raw = minimal_config("digits");
    raw["search"] = json{{"archive_threshold", -0.1}};
    expect_contains(load_error(raw), "search.archive_threshold must be nonnegative");

    raw = minimal_config("digits");
    raw["weakness"] = json{{"confidence_threshold", 1.5}};
    expect_contains(load_error(raw), "weakness.confidence_threshold must lie in [0, 1]");

    raw = minimal_config("digits");
    raw["weakness"] = json{{"remove_fraction", -0.2}};
    expect_contains(load_error(raw), "weakness.remove_fraction must lie in [0, 1]");
}

TEST_F(RunConfigTest, ValidateChecksOperatorEntries) {
    const auto with_op = [](json op) {
        json raw = minimal_config("digits");
        raw["operators"] = json::array({std::move(op)});
        return raw;
    };

    expect_contains(load_error(with_op(json{{"op", "XYZ"}})), "unknown operator 'XYZ'");

    expect_contains(load_error(with_op(json{{"op", "TRD"}, {"lo", 0.5}, {"hi", 0.5}})),
                    "TRD: need lo < hi and epsilon > 0");
    expect_contains(load_error(with_op(json{{"op", "TRD"}, {"epsilon", 0.0}})),
                    "TRD: need lo < hi and epsilon > 0");
    expect_contains(load_error(with_op(json{{"op", "TRD"}, {"hi", 0.995}})),
                    "TRD: percentage range must stay within [0, 0.99]");
    expect_contains(load_error(with_op(json{{"op", "HLR"}, {"hi", 1.5}})),
                    "HLR: aggressiveness range must stay within [0, 1]");
    expect_contains(
        load_error(with_op(json{{"op", "TRD"}, {"values", json::array({"x"})}})),
        "TRD: continuous operators take no 'values' list");
    expect_contains(load_error(with_op(json{{"op", "ACH"}})),
                    "ACH: discrete operators need a non-empty 'values' list");
    expect_contains(load_error(with_op(json{{"op", "TCL"}})), "TCL: needs target_label");
    expect_contains(load_error(with_op(json{{"op", "TUD"}})), "TUD: needs target_label");
    expect_contains(load_error(with_op(json{{"op", "TCO"}, {"target_label", 1}})),
                    "TCO: needs second_label");
}

TEST_F(RunConfigTest, AcceptsBoundaryOperatorRanges) {
    // HLR over the whole legal aggressiveness range and TRD capped at 0.99
    // are both valid extremes.
    json raw = minimal_config("digits");
    raw["operators"] = json::array({
        json{{"op", "HLR"}, {"lo", 0.0}, {"hi", 1.0}},
        json{{"op", "TRD"}, {"lo", 0.0}, {"hi", 0.99}},
    });
    const RunConfig cfg = load(raw);
    ASSERT_EQ(cfg.operators.size(), 2u);
    EXPECT_DOUBLE_EQ(cfg.operators[0].hi, 1.0);
    EXPECT_DOUBLE_EQ(cfg.operators[1].hi, 0.99);
}

TEST_F(RunConfigTest, MalformedJsonNamesTheFile) {
    const auto path = dir_.path() / "broken.json";
    write_text_file(path, "not json {\n");
    try {
        load_run_config(path);
        FAIL() << "expected parse failure";
    } catch (const std::runtime_error& e) {
        const std::string message = e.what();
        expect_contains(message, "config: ");
        expect_contains(message, path.string());
    }

    const auto array_path = dir_.path() / "array.json";
    write_text_file(array_path, "[]\n");
    try {
        load_run_config(array_path);
        FAIL() << "expected type failure";
    } catch (const std::runtime_error& e) {
        expect_contains(e.what(), "top level must be an object");
    }
}

TEST_F(RunConfigTest, MissingFileThrows) {
    EXPECT_THROW(load_run_config(dir_.path() / "nope.json"), std::runtime_error);
}

TEST_F(RunConfigTest, FullScaleSwitchesPopulationSizing) {
    RunConfig digits = load(minimal_config("digits"));
    digits.search.rng_seed = 42;
    apply_full_scale(digits);
    EXPECT_EQ(digits.search.popsize, 100);
    EXPECT_EQ(digits.search.g_max, 1000);
    EXPECT_EQ(digits.search.repop_upper_bound, 10);
    EXPECT_EQ(digits.search.rng_seed, 42u); // untouched

    RunConfig regression = load(minimal_config("regression"));
    apply_full_scale(regression);
    EXPECT_EQ(regression.search.popsize, 12);
    EXPECT_EQ(regression.search.g_max, 100);
    EXPECT_EQ(regression.search.repop_upper_bound, 2);
}

} // namespace
} // namespace metisforge::cli
