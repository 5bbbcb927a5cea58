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

#include "metisforge/harness/dataset.hpp"

#include <fstream>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace metisforge::harness {
namespace {

using test::TempDir;
using test::tiny_classification_dataset;

Dataset tiny_regression_dataset() {
    Dataset ds;
    ds.task = Task::regression;
    ds.input_dim = 3;
    ds.num_classes = 0;
    for (int i = 0; i < 6; ++i) {
        const double v = 0.1 * i;
        ds.train.inputs.push_back({v, -v, 1.0});
        ds.train.targets.emplace_back(0.2 * i, -0.1 * i);
    }
    ds.test.inputs.push_back({0.5, 0.5, 0.5});
    ds.test.targets.emplace_back(0.3, -0.3);
    validate(ds);
    return ds;
}

TEST(DatasetValidate, AcceptsWellFormedData) {
    EXPECT_NO_THROW(validate(tiny_classification_dataset(3, 4, 5, 2)));
    EXPECT_NO_THROW(validate(tiny_regression_dataset()));
}

TEST(DatasetValidate, RejectsStructuralViolations) {
    Dataset ds = tiny_classification_dataset(3, 4, 5, 2);
    ds.input_dim = 0;
    EXPECT_THROW(validate(ds), std::invalid_argument);

    ds = tiny_classification_dataset(3, 4, 5, 2);
    ds.num_classes = 1;
    EXPECT_THROW(validate(ds), std::invalid_argument);

    ds = tiny_classification_dataset(3, 4, 5, 2);
    ds.train.labels[0] = 3; // out of range for 3 classes
    EXPECT_THROW(validate(ds), std::invalid_argument);

    ds = tiny_classification_dataset(3, 4, 5, 2);
    ds.train.inputs[0].push_back(0.0); // row dimension mismatch
    EXPECT_THROW(validate(ds), std::invalid_argument);

    ds = tiny_classification_dataset(3, 4, 5, 2);
    ds.train.targets.emplace_back(0.0, 0.0); // classification rows carry labels only
    EXPECT_THROW(validate(ds), std::invalid_argument);

    Dataset reg = tiny_regression_dataset();
    reg.train.labels.push_back(0); // regression rows carry targets only
    EXPECT_THROW(validate(reg), std::invalid_argument);

    reg = tiny_regression_dataset();
    reg.train.targets.pop_back(); // row/target count mismatch
    EXPECT_THROW(validate(reg), std::invalid_argument);
}

TEST(DatasetHash, SensitiveToRowLabelAndTargetChanges) {
    const Dataset base = tiny_classification_dataset(3, 4, 5, 2);
    const std::uint64_t base_hash = dataset_hash(base);
    EXPECT_EQ(dataset_hash(tiny_classification_dataset(3, 4, 5, 2)), base_hash);

    Dataset changed = base;
    changed.train.inputs[0][0] += 1e-9;
    EXPECT_NE(dataset_hash(changed), base_hash);

    changed = base;
    changed.train.labels[0] = (changed.train.labels[0] + 1) % 3;
    EXPECT_NE(dataset_hash(changed), base_hash);

    changed = base;
    changed.test.inputs[0][1] -= 0.5;
    EXPECT_NE(dataset_hash(changed), base_hash);

    const Dataset reg = tiny_regression_dataset();
    Dataset reg_changed = reg;
    reg_changed.train.targets[0].second += 1e-9;
    EXPECT_NE(dataset_hash(reg_changed), dataset_hash(reg));
}

TEST(DatasetHash, SplitHashSeparatesTrainFromTest) {
    const Dataset ds = tiny_classification_dataset(3, 4, 5, 2);
    EXPECT_NE(split_hash(ds.train, ds.task), split_hash(ds.test, ds.task));
}

TEST(DatasetSubset, PreservesOrderAndAllowsDuplicates) {
    const Dataset ds = tiny_classification_dataset(3, 4, 5, 2);
    const DataSplit picked = subset(ds.train, ds.task, {4, 0, 4});
    ASSERT_EQ(picked.size(), 3u);
    EXPECT_EQ(picked.inputs[0], ds.train.inputs[4]);
    EXPECT_EQ(picked.inputs[1], ds.train.inputs[0]);
    EXPECT_EQ(picked.inputs[2], ds.train.inputs[4]);
    EXPECT_EQ(picked.labels[0], ds.train.labels[4]);
    EXPECT_EQ(picked.labels[1], ds.train.labels[0]);

    const Dataset reg = tiny_regression_dataset();
    const DataSplit reg_picked = subset(reg.train, reg.task, {2});
    ASSERT_EQ(reg_picked.size(), 1u);
    EXPECT_EQ(reg_picked.targets[0], reg.train.targets[2]);
    EXPECT_TRUE(reg_picked.labels.empty());
}

TEST(DatasetSubset, RejectsOutOfRangeRows) {
    const Dataset ds = tiny_classification_dataset(3, 4, 5, 2);
    EXPECT_THROW(subset(ds.train, ds.task, {ds.train.size()}), std::out_of_range);
}

TEST(DatasetFiles, SaveLoadRoundTripsExactly) {
    const TempDir dir("dataset_io");
    const auto path = dir.path() / "tiny.mfd";
    const Dataset ds = tiny_classification_dataset(3, 4, 5, 2);
    save_dataset(path, ds);
    const Dataset loaded = load_dataset(path);
    EXPECT_EQ(loaded.task, ds.task);
    EXPECT_EQ(loaded.input_dim, ds.input_dim);
    EXPECT_EQ(loaded.num_classes, ds.num_classes);
    EXPECT_EQ(loaded.train.inputs, ds.train.inputs);
    EXPECT_EQ(loaded.train.labels, ds.train.labels);
    EXPECT_EQ(loaded.test.inputs, ds.test.inputs);
    EXPECT_EQ(dataset_hash(loaded), dataset_hash(ds));

    const Dataset reg = tiny_regression_dataset();
    const auto reg_path = dir.path() / "reg.mfd";
    save_dataset(reg_path, reg);
    const Dataset reg_loaded = load_dataset(reg_path);
    EXPECT_EQ(reg_loaded.train.targets, reg.train.targets);
    EXPECT_EQ(dataset_hash(reg_loaded), dataset_hash(reg));
}

TEST(DatasetFiles, RejectsCorruptAndMissingFiles) {
    const TempDir dir("dataset_bad");
    const auto path = dir.path() / "tiny.mfd";
    save_dataset(path, tiny_classification_dataset(3, 4, 5, 2));

    // Corrupt the magic.
    {
        std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
        f.put('X');
    }
    EXPECT_THROW(load_dataset(path), std::runtime_error);
    EXPECT_THROW(load_dataset(dir.path() / "absent.mfd"), std::runtime_error);
}

TEST(DatasetFiles, RejectsTruncatedPayload) {
    const TempDir dir("dataset_trunc");
    const auto path = dir.path() / "tiny.mfd";
    save_dataset(path, tiny_classification_dataset(3, 4, 5, 2));
    const auto full_size = std::filesystem::file_size(path);
    std::filesystem::resize_file(path, full_size - 8);
    EXPECT_THROW(load_dataset(path), std::runtime_error);
}

} // namespace
} // namespace metisforge::harness
