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

#include "metisforge/harness/model.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

#include "metisforge/common/hash.hpp"
#include "metisforge/common/text.hpp"

namespace metisforge::harness {

namespace {

constexpr char kMagic[4] = {'M', 'F', 'M', 'D'};
constexpr std::uint32_t kVersion = 1;

Eigen::VectorXd apply_activation(const std::string& name, Eigen::VectorXd z) {
    if (name == "relu") {
        return z.cwiseMax(0.0);
    }
    if (name == "sigmoid") {
        return z.unaryExpr([](double x) { return 1.0 / (1.0 + std::exp(-x)); });
    }
    if (name == "tanh") {
        return z.unaryExpr([](double x) { return std::tanh(x); });
    }
    if (name == "linear") {
        return z;
    }
    throw std::invalid_argument("model: unknown activation '" + name + "'");
}

} // namespace

double apply_activation_scalar(const std::string& name, double x) {
    if (name == "relu") {
        return x > 0.0 ? x : 0.0;
    }
    if (name == "sigmoid") {
        return 1.0 / (1.0 + std::exp(-x));
    }
    if (name == "tanh") {
        return std::tanh(x);
    }
    if (name == "linear") {
        return x;
    }
    throw std::invalid_argument("model: unknown activation '" + name + "'");
}

Eigen::VectorXd TinyModel::forward(const Eigen::VectorXd& input) const {
    if (input.size() != layer_sizes.front()) {
        throw std::invalid_argument("model: input dimension mismatch");
    }
    Eigen::VectorXd h = input;
    const std::size_t layers = weights.size();
    for (std::size_t l = 0; l < layers; ++l) {
        Eigen::VectorXd z = weights[l] * h + biases[l];
        if (l + 1 < layers) {
            h = apply_activation(activations[l], std::move(z));
        } else if (task == Task::classification) {
            const double zmax = z.maxCoeff();
            Eigen::VectorXd e = (z.array() - zmax).exp();
            h = e / e.sum();
        } else {
            h = std::move(z);
        }
    }
    return h;
}

std::vector<double> TinyModel::predict(const std::vector<double>& input) const {
    Eigen::VectorXd x(input.size());
    for (std::size_t i = 0; i < input.size(); ++i) {
        x[static_cast<Eigen::Index>(i)] = input[i];
    }
    const Eigen::VectorXd y = forward(x);
    return std::vector<double>(y.data(), y.data() + y.size());
}

std::uint64_t TinyModel::fingerprint() const {
    return Fnv1a().u64(spec_hash).u64(seed).value();
}

void save_model(const std::filesystem::path& path, const TinyModel& model) {
    std::vector<std::uint8_t> bytes;
    const auto put_u32 = [&](std::uint32_t v) {
        for (int i = 0; i < 4; ++i) {
            bytes.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
        }
    };
    const auto put_u64 = [&](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            bytes.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
        }
    };
    const auto put_f64 = [&](double v) {
        std::uint64_t bits = 0;
        std::memcpy(&bits, &v, sizeof(bits));
        put_u64(bits);
    };
    const auto put_str = [&](const std::string& s) {
        put_u32(static_cast<std::uint32_t>(s.size()));
        bytes.insert(bytes.end(), s.begin(), s.end());
    };

    bytes.insert(bytes.end(), kMagic, kMagic + 4);
    put_u32(kVersion);
    bytes.push_back(static_cast<std::uint8_t>(model.task));
    put_u64(model.spec_hash);
    put_u64(model.seed);
    put_u32(static_cast<std::uint32_t>(model.layer_sizes.size()));
    for (int size : model.layer_sizes) {
        put_u32(static_cast<std::uint32_t>(size));
    }
    put_u32(static_cast<std::uint32_t>(model.activations.size()));
    for (const std::string& name : model.activations) {
        put_str(name);
    }
    for (std::size_t l = 0; l < model.weights.size(); ++l) {
        const Eigen::MatrixXd& w = model.weights[l];
        for (Eigen::Index r = 0; r < w.rows(); ++r) {
            for (Eigen::Index c = 0; c < w.cols(); ++c) {
                put_f64(w(r, c));
            }
        }
        for (Eigen::Index r = 0; r < model.biases[l].size(); ++r) {
            put_f64(model.biases[l][r]);
        }
    }
    write_binary_file(path, bytes.data(), bytes.size());
}

TinyModel load_model(const std::filesystem::path& path) {
    const std::vector<std::uint8_t> bytes = read_binary_file(path);
    std::size_t pos = 0;
    const auto need = [&](std::size_t n) {
        if (pos + n > bytes.size()) {
            throw std::runtime_error(path.string() + ": truncated model file");
        }
    };
    const auto get_u32 = [&]() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) {
            v |= static_cast<std::uint32_t>(bytes[pos++]) << (8 * i);
        }
        return v;
    };
    const auto get_u64 = [&]() {
        need(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) {
            v |= static_cast<std::uint64_t>(bytes[pos++]) << (8 * i);
        }
        return v;
    };
    const auto get_f64 = [&]() {
        const std::uint64_t bits = get_u64();
        double v = 0.0;
        std::memcpy(&v, &bits, sizeof(v));
        return v;
    };
    const auto get_str = [&]() {
        const std::uint32_t n = get_u32();
        need(n);
        std::string s(bytes.begin() + static_cast<std::ptrdiff_t>(pos),
                      bytes.begin() + static_cast<std::ptrdiff_t>(pos + n));
        pos += n;
        return s;
    };

    need(4);
    if (std::memcmp(bytes.data(), kMagic, 4) != 0) {
        throw std::runtime_error(path.string() + ": bad model file magic");
    }
    pos += 4;
    if (get_u32() != kVersion) {
        throw std::runtime_error(path.string() + ": unsupported model version");
    }
    TinyModel model;
    need(1);
    model.task = static_cast<Task>(bytes[pos++]);
    model.spec_hash = get_u64();
    model.seed = get_u64();
    const std::uint32_t num_sizes = get_u32();
    for (std::uint32_t i = 0; i < num_sizes; ++i) {
        model.layer_sizes.push_back(static_cast<int>(get_u32()));
    }
    if (model.layer_sizes.size() < 2) {
        throw std::runtime_error(path.string() + ": model needs at least two layers");
    }
    const std::uint32_t num_acts = get_u32();
    for (std::uint32_t i = 0; i < num_acts; ++i) {
        model.activations.push_back(get_str());
    }
    for (std::size_t l = 0; l + 1 < model.layer_sizes.size(); ++l) {
        const int rows = model.layer_sizes[l + 1];
        const int cols = model.layer_sizes[l];
        Eigen::MatrixXd w(rows, cols);
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c) {
                w(r, c) = get_f64();
            }
        }
        Eigen::VectorXd b(rows);
        for (int r = 0; r < rows; ++r) {
            b[r] = get_f64();
        }
        model.weights.push_back(std::move(w));
        model.biases.push_back(std::move(b));
    }
    if (pos != bytes.size()) {
        throw std::runtime_error(path.string() + ": trailing bytes after payload");
    }
    return model;
}

} // namespace metisforge::harness
