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

#include <cstring>
#include <stdexcept>
#include <string>

#include "metisforge/common/hash.hpp"
#include "metisforge/common/text.hpp"

namespace metisforge::harness {

namespace {

constexpr char kMagic[4] = {'M', 'F', 'D', 'S'};
constexpr std::uint32_t kVersion = 1;

class ByteWriter {
public:
    void u8(std::uint8_t v) { bytes_.push_back(v); }
    void u32(std::uint32_t v) {
        for (int i = 0; i < 4; ++i) {
            bytes_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
        }
    }
    void i32(std::int32_t v) { u32(static_cast<std::uint32_t>(v)); }
    void f64(double v) {
        std::uint64_t bits = 0;
        std::memcpy(&bits, &v, sizeof(bits));
        for (int i = 0; i < 8; ++i) {
            bytes_.push_back(static_cast<std::uint8_t>(bits >> (8 * i)));
        }
    }
    void raw(const char* data, std::size_t n) {
        bytes_.insert(bytes_.end(), data, data + n);
    }
    std::vector<std::uint8_t> take() { return std::move(bytes_); }

private:
    std::vector<std::uint8_t> bytes_;
};

class ByteReader {
public:
    ByteReader(const std::vector<std::uint8_t>& bytes, std::string origin)
        : bytes_(bytes), origin_(std::move(origin)) {}

    std::uint8_t u8() {
        need(1);
        return bytes_[pos_++];
    }
    std::uint32_t u32() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) {
            v |= static_cast<std::uint32_t>(bytes_[pos_++]) << (8 * i);
        }
        return v;
    }
    std::int32_t i32() { return static_cast<std::int32_t>(u32()); }
    double f64() {
        need(8);
        std::uint64_t bits = 0;
        for (int i = 0; i < 8; ++i) {
            bits |= static_cast<std::uint64_t>(bytes_[pos_++]) << (8 * i);
        }
        double v = 0.0;
        std::memcpy(&v, &bits, sizeof(v));
        return v;
    }
    void expect_magic(const char magic[4]) {
        need(4);
        if (std::memcmp(bytes_.data() + pos_, magic, 4) != 0) {
            throw std::runtime_error(origin_ + ": bad file magic");
        }
        pos_ += 4;
    }
    void expect_exhausted() {
        if (pos_ != bytes_.size()) {
            throw std::runtime_error(origin_ + ": trailing bytes after payload");
        }
    }

private:
    void need(std::size_t n) {
        if (pos_ + n > bytes_.size()) {
            throw std::runtime_error(origin_ + ": truncated file");
        }
    }
    const std::vector<std::uint8_t>& bytes_;
    std::string origin_;
    std::size_t pos_ = 0;
};

void write_split(ByteWriter& w, const DataSplit& split, Task task) {
    for (std::size_t r = 0; r < split.size(); ++r) {
        for (double v : split.inputs[r]) {
            w.f64(v);
        }
        if (task == Task::classification) {
            w.i32(split.labels[r]);
        } else {
            w.f64(split.targets[r].first);
            w.f64(split.targets[r].second);
        }
    }
}

DataSplit read_split(ByteReader& r, Task task, std::uint32_t count, std::uint32_t input_dim) {
    DataSplit split;
    split.inputs.reserve(count);
    for (std::uint32_t row = 0; row < count; ++row) {
        std::vector<double> input(input_dim);
        for (std::uint32_t i = 0; i < input_dim; ++i) {
            input[i] = r.f64();
        }
        split.inputs.push_back(std::move(input));
        if (task == Task::classification) {
            split.labels.push_back(r.i32());
        } else {
            const double pitch = r.f64();
            const double yaw = r.f64();
            split.targets.emplace_back(pitch, yaw);
        }
    }
    return split;
}

} // namespace

void validate_split(const DataSplit& split, Task task, int input_dim, int num_classes) {
    if (task == Task::classification) {
        if (split.labels.size() != split.inputs.size() || !split.targets.empty()) {
            throw std::invalid_argument("dataset: classification rows must carry labels only");
        }
        for (int label : split.labels) {
            if (label < 0 || label >= num_classes) {
                throw std::invalid_argument("dataset: label out of range");
            }
        }
    } else {
        if (split.targets.size() != split.inputs.size() || !split.labels.empty()) {
            throw std::invalid_argument("dataset: regression rows must carry targets only");
        }
    }
    for (const std::vector<double>& input : split.inputs) {
        if (static_cast<int>(input.size()) != input_dim) {
            throw std::invalid_argument("dataset: row dimension mismatch");
        }
    }
}

void validate(const Dataset& ds) {
    if (ds.input_dim <= 0) {
        throw std::invalid_argument("dataset: input_dim must be positive");
    }
    if (ds.task == Task::classification && ds.num_classes <= 1) {
        throw std::invalid_argument("dataset: classification needs at least two classes");
    }
    validate_split(ds.train, ds.task, ds.input_dim, ds.num_classes);
    validate_split(ds.test, ds.task, ds.input_dim, ds.num_classes);
}

std::uint64_t split_hash(const DataSplit& split, Task task) {
    Fnv1a h;
    h.u64(split.size());
    for (std::size_t r = 0; r < split.size(); ++r) {
        h.span_f64(split.inputs[r]);
        if (task == Task::classification) {
            h.u32(static_cast<std::uint32_t>(split.labels[r]));
        } else {
            h.f64(split.targets[r].first).f64(split.targets[r].second);
        }
    }
    return h.value();
}

std::uint64_t dataset_hash(const Dataset& ds) {
    Fnv1a h;
    h.u8(static_cast<std::uint8_t>(ds.task))
        .u32(static_cast<std::uint32_t>(ds.input_dim))
        .u32(static_cast<std::uint32_t>(ds.num_classes))
        .u64(split_hash(ds.train, ds.task))
        .u64(split_hash(ds.test, ds.task));
    return h.value();
}

DataSplit subset(const DataSplit& split, Task task, const std::vector<std::size_t>& rows) {
    DataSplit out;
    out.inputs.reserve(rows.size());
    for (std::size_t r : rows) {
        if (r >= split.size()) {
            throw std::out_of_range("subset: row index " + std::to_string(r) +
                                    " beyond split size " + std::to_string(split.size()));
        }
        out.inputs.push_back(split.inputs[r]);
        if (task == Task::classification) {
            out.labels.push_back(split.labels[r]);
        } else {
            out.targets.push_back(split.targets[r]);
        }
    }
    return out;
}

void save_dataset(const std::filesystem::path& path, const Dataset& ds) {
    validate(ds);
    ByteWriter w;
    w.raw(kMagic, 4);
    w.u32(kVersion);
    w.u8(static_cast<std::uint8_t>(ds.task));
    w.u32(static_cast<std::uint32_t>(ds.input_dim));
    w.u32(static_cast<std::uint32_t>(ds.num_classes));
    w.u32(static_cast<std::uint32_t>(ds.train.size()));
    w.u32(static_cast<std::uint32_t>(ds.test.size()));
    write_split(w, ds.train, ds.task);
    write_split(w, ds.test, ds.task);
    const std::vector<std::uint8_t> bytes = w.take();
    write_binary_file(path, bytes.data(), bytes.size());
}

Dataset load_dataset(const std::filesystem::path& path) {
    const std::vector<std::uint8_t> bytes = read_binary_file(path);
    ByteReader r(bytes, path.string());
    r.expect_magic(kMagic);
    if (r.u32() != kVersion) {
        throw std::runtime_error(path.string() + ": unsupported dataset version");
    }
    Dataset ds;
    ds.task = static_cast<Task>(r.u8());
    ds.input_dim = static_cast<int>(r.u32());
    ds.num_classes = static_cast<int>(r.u32());
    const std::uint32_t train_count = r.u32();
    const std::uint32_t test_count = r.u32();
    ds.train = read_split(r, ds.task, train_count, static_cast<std::uint32_t>(ds.input_dim));
    ds.test = read_split(r, ds.task, test_count, static_cast<std::uint32_t>(ds.input_dim));
    r.expect_exhausted();
    validate(ds);
    return ds;
}

} // namespace metisforge::harness
