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

#include "metisforge/harness/train.hpp"

#include <cmath>
#include <stdexcept>

#include "metisforge/common/hash.hpp"
#include "metisforge/common/rng.hpp"

namespace metisforge::harness {

namespace {

const char* const kActivationNames[] = {"relu", "sigmoid", "tanh", "linear"};
const char* const kInitNames[] = {"he_uniform", "zeros", "ones", "small_gaussian"};

bool known(const std::string& name, const char* const* names, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
        if (name == names[i]) {
            return true;
        }
    }
    return false;
}

double activation_derivative(const std::string& name, double activated) {
    // Derivatives written in terms of the activated value.
    if (name == "relu") {
        return activated > 0.0 ? 1.0 : 0.0;
    }
    if (name == "sigmoid") {
        return activated * (1.0 - activated);
    }
    if (name == "tanh") {
        return 1.0 - activated * activated;
    }
    return 1.0; // linear
}

} // namespace

void validate(const TrainSpec& spec) {
    if (spec.hidden_sizes.size() != spec.activations.size()) {
        throw std::invalid_argument("train spec: one activation per hidden layer required");
    }
    for (int size : spec.hidden_sizes) {
        if (size <= 0) {
            throw std::invalid_argument("train spec: hidden sizes must be positive");
        }
    }
    for (const std::string& name : spec.activations) {
        if (!known(name, kActivationNames, 4)) {
            throw std::invalid_argument("train spec: unknown activation '" + name + "'");
        }
    }
    if (!known(spec.weight_init, kInitNames, 4)) {
        throw std::invalid_argument("train spec: unknown weight init '" + spec.weight_init + "'");
    }
    if (spec.epochs < 0) {
        throw std::invalid_argument("train spec: epochs must be non-negative");
    }
    if (!(spec.learning_rate > 0.0)) {
        throw std::invalid_argument("train spec: learning rate must be positive");
    }
    if (spec.batch_size <= 0) {
        throw std::invalid_argument("train spec: batch size must be positive");
    }
}

std::uint64_t spec_hash(const TrainSpec& spec) {
    Fnv1a h;
    h.u64(spec.hidden_sizes.size());
    for (int size : spec.hidden_sizes) {
        h.u32(static_cast<std::uint32_t>(size));
    }
    for (const std::string& name : spec.activations) {
        h.str(name);
    }
    h.u32(static_cast<std::uint32_t>(spec.epochs))
        .f64(spec.learning_rate)
        .u32(static_cast<std::uint32_t>(spec.batch_size))
        .str(spec.weight_init)
        .u64(spec.rng_seed)
        .u8(static_cast<std::uint8_t>(spec.task));
    return h.value();
}

TinyModel initialize_model(const TrainSpec& spec, int input_dim, int output_dim) {
    validate(spec);
    TinyModel model;
    model.task = spec.task;
    model.spec_hash = spec_hash(spec);
    model.seed = spec.rng_seed;
    model.layer_sizes.push_back(input_dim);
    for (int size : spec.hidden_sizes) {
        model.layer_sizes.push_back(size);
    }
    model.layer_sizes.push_back(output_dim);
    model.activations = spec.activations;

    Rng rng(spec.rng_seed);
    for (std::size_t l = 0; l + 1 < model.layer_sizes.size(); ++l) {
        const int fan_in = model.layer_sizes[l];
        const int fan_out = model.layer_sizes[l + 1];
        Eigen::MatrixXd w(fan_out, fan_in);
        for (int r = 0; r < fan_out; ++r) {
            for (int c = 0; c < fan_in; ++c) {
                if (spec.weight_init == "he_uniform") {
                    const double limit = std::sqrt(6.0 / fan_in);
                    w(r, c) = rng.uniform(-limit, limit);
                } else if (spec.weight_init == "zeros") {
                    w(r, c) = 0.0;
                } else if (spec.weight_init == "ones") {
                    w(r, c) = 1.0;
                } else { // small_gaussian
                    w(r, c) = 0.05 * rng.normal();
                }
            }
        }
        model.weights.push_back(std::move(w));
        model.biases.emplace_back(Eigen::VectorXd::Zero(fan_out));
    }
    return model;
}

TinyModel train(const Dataset& ds, const TrainSpec& spec) {
    validate(ds);
    validate(spec);
    if (ds.task != spec.task) {
        throw std::invalid_argument("train: dataset and spec tasks differ");
    }
    if (ds.train.size() == 0) {
        throw std::invalid_argument("train: empty training split");
    }
    const int output_dim = spec.task == Task::classification ? ds.num_classes : 2;
    TinyModel model = initialize_model(spec, ds.input_dim, output_dim);
    // The trained weights depend on the data as much as on the spec, so the
    // model's identity must cover both; otherwise two instances trained on
    // different row subsets under the same spec would be indistinguishable.
    model.spec_hash = Fnv1a().u64(model.spec_hash).u64(dataset_hash(ds)).value();

    const std::size_t rows = ds.train.size();
    std::vector<Eigen::VectorXd> inputs(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        inputs[r] = Eigen::Map<const Eigen::VectorXd>(ds.train.inputs[r].data(),
                                                      static_cast<Eigen::Index>(ds.input_dim));
    }

    const std::size_t layers = model.weights.size();
    Rng shuffle_rng(Fnv1a().u64(spec.rng_seed).str("shuffle").value());

    for (int epoch = 0; epoch < spec.epochs; ++epoch) {
        const std::vector<std::size_t> order = shuffle_rng.permutation(rows);
        for (std::size_t batch_start = 0, batch_index = 0; batch_start < rows;
             batch_start += static_cast<std::size_t>(spec.batch_size), ++batch_index) {
            const std::size_t batch_end =
                std::min(rows, batch_start + static_cast<std::size_t>(spec.batch_size));
            const double batch_n = static_cast<double>(batch_end - batch_start);

            std::vector<Eigen::MatrixXd> grad_w;
            std::vector<Eigen::VectorXd> grad_b;
            for (std::size_t l = 0; l < layers; ++l) {
                grad_w.emplace_back(
                    Eigen::MatrixXd::Zero(model.weights[l].rows(), model.weights[l].cols()));
                grad_b.emplace_back(Eigen::VectorXd::Zero(model.biases[l].size()));
            }

            double batch_loss = 0.0;
            for (std::size_t b = batch_start; b < batch_end; ++b) {
                const std::size_t row = order[b];

                // Forward pass, keeping activations for backprop.
                std::vector<Eigen::VectorXd> acts;
                acts.push_back(inputs[row]);
                for (std::size_t l = 0; l < layers; ++l) {
                    Eigen::VectorXd z = model.weights[l] * acts.back() + model.biases[l];
                    if (l + 1 < layers) {
                        Eigen::VectorXd a(z.size());
                        for (Eigen::Index i = 0; i < z.size(); ++i) {
                            a[i] = apply_activation_scalar(model.activations[l], z[i]);
                        }
                        acts.push_back(std::move(a));
                    } else if (spec.task == Task::classification) {
                        const double zmax = z.maxCoeff();
                        Eigen::VectorXd e = (z.array() - zmax).exp();
                        acts.push_back(e / e.sum());
                    } else {
                        acts.push_back(std::move(z));
                    }
                }

                // Output delta; softmax+cross-entropy and identity+squared
                // error both reduce to (prediction - target) up to a factor.
                Eigen::VectorXd delta;
                if (spec.task == Task::classification) {
                    const int label = ds.train.labels[row];
                    delta = acts.back();
                    delta[label] -= 1.0;
                    batch_loss += -std::log(std::max(acts.back()[label], 1e-300));
                } else {
                    Eigen::VectorXd target(2);
                    target << ds.train.targets[row].first, ds.train.targets[row].second;
                    const Eigen::VectorXd diff = acts.back() - target;
                    delta = 2.0 * diff;
                    batch_loss += diff.squaredNorm();
                }

                for (std::size_t l = layers; l-- > 0;) {
                    grad_w[l].noalias() += delta * acts[l].transpose();
                    grad_b[l] += delta;
                    if (l > 0) {
                        Eigen::VectorXd back = model.weights[l].transpose() * delta;
                        const Eigen::VectorXd& activated = acts[l];
                        for (Eigen::Index i = 0; i < back.size(); ++i) {
                            back[i] *= activation_derivative(model.activations[l - 1], activated[i]);
                        }
                        delta = std::move(back);
                    }
                }
            }

            if (!std::isfinite(batch_loss)) {
                throw TrainingDiverged("train: non-finite loss at epoch " +
                                       std::to_string(epoch) + ", batch " +
                                       std::to_string(batch_index));
            }
            const double scale = spec.learning_rate / batch_n;
            for (std::size_t l = 0; l < layers; ++l) {
                model.weights[l].noalias() -= scale * grad_w[l];
                model.biases[l] -= scale * grad_b[l];
            }
        }
    }
    return model;
}

} // namespace metisforge::harness
