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

#include "metisforge/harness/mutation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace metisforge::harness {

namespace {

const char* const kContinuousOps[] = {"TCL", "TRD", "TUD", "TAN", "TCO", "HLR", "HNE"};
const char* const kPercentageOps[] = {"TCL", "TRD", "TUD", "TAN", "TCO"};
const char* const kDiscreteOps[] = {"ACH", "ARM", "WCI"};

bool in(const std::string& op, const char* const* names, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
        if (op == names[i]) {
            return true;
        }
    }
    return false;
}

void check_percentage(double p) {
    if (!(p >= 0.0 && p <= 0.99)) {
        throw std::invalid_argument(
            "mutation: percentage must lie in [0, 0.99]; removing or perturbing all "
            "training data is not a valid configuration");
    }
}

// Indices of training rows carrying the given label.
std::vector<std::size_t> rows_with_label(const DataSplit& train, int label) {
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < train.labels.size(); ++r) {
        if (train.labels[r] == label) {
            rows.push_back(r);
        }
    }
    return rows;
}

// First k entries of a random permutation of `pool`, in draw order.
std::vector<std::size_t> choose_rows(const std::vector<std::size_t>& pool, std::size_t k,
                                     Rng& rng) {
    const std::vector<std::size_t> perm = rng.permutation(pool.size());
    std::vector<std::size_t> chosen;
    chosen.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        chosen.push_back(pool[perm[i]]);
    }
    return chosen;
}

void erase_rows(DataSplit& train, Task task, std::vector<std::size_t> doomed) {
    std::sort(doomed.begin(), doomed.end(), std::greater<>());
    for (std::size_t row : doomed) {
        train.inputs.erase(train.inputs.begin() + static_cast<std::ptrdiff_t>(row));
        if (task == Task::classification) {
            train.labels.erase(train.labels.begin() + static_cast<std::ptrdiff_t>(row));
        } else {
            train.targets.erase(train.targets.begin() + static_cast<std::ptrdiff_t>(row));
        }
    }
}

std::vector<double> per_feature_std(const DataSplit& train, int input_dim) {
    std::vector<double> mean(static_cast<std::size_t>(input_dim), 0.0);
    std::vector<double> var(static_cast<std::size_t>(input_dim), 0.0);
    const double n = static_cast<double>(train.size());
    for (const std::vector<double>& row : train.inputs) {
        for (int f = 0; f < input_dim; ++f) {
            mean[f] += row[f];
        }
    }
    for (double& m : mean) {
        m /= n;
    }
    for (const std::vector<double>& row : train.inputs) {
        for (int f = 0; f < input_dim; ++f) {
            const double d = row[f] - mean[f];
            var[f] += d * d;
        }
    }
    std::vector<double> std_dev(static_cast<std::size_t>(input_dim), 0.0);
    for (int f = 0; f < input_dim; ++f) {
        std_dev[f] = std::sqrt(var[f] / n);
    }
    return std_dev;
}

int parse_layer_index(const std::string& text, std::size_t hidden_layers) {
    std::size_t consumed = 0;
    int layer = -1;
    try {
        layer = std::stoi(text, &consumed);
    } catch (const std::exception&) {
        throw std::invalid_argument("mutation: bad layer index '" + text + "'");
    }
    if (consumed != text.size() || layer < 0 ||
        static_cast<std::size_t>(layer) >= hidden_layers) {
        throw std::invalid_argument("mutation: layer index " + text +
                                    " outside the hidden layers");
    }
    return layer;
}

} // namespace

bool is_continuous_operator(const std::string& op) {
    return in(op, kContinuousOps, 7);
}

bool is_percentage_operator(const std::string& op) {
    return in(op, kPercentageOps, 5);
}

bool is_known_operator(const std::string& op) {
    return is_continuous_operator(op) || in(op, kDiscreteOps, 3);
}

std::size_t affected_row_count(double percentage, std::size_t eligible) {
    return static_cast<std::size_t>(
        std::floor(percentage * static_cast<double>(eligible) + 0.5));
}

double hlr_learning_rate(double base_learning_rate, double aggressiveness) {
    // Geometric interpolation from base down to base/1000 at aggressiveness 1.
    return base_learning_rate * std::pow(1.0e-3, aggressiveness);
}

int hne_epochs(int base_epochs, double aggressiveness) {
    return static_cast<int>(
        std::lround(static_cast<double>(base_epochs) * (1.0 - aggressiveness)));
}

std::pair<Dataset, TrainSpec> apply_mutation(const Dataset& ds, const TrainSpec& spec,
                                             const MutationSpec& mu, Rng& rng) {
    validate(ds);
    validate(spec);
    if (!is_known_operator(mu.op)) {
        throw std::invalid_argument("mutation: unknown operator '" + mu.op + "'");
    }
    const bool label_targeted = mu.op == "TCL" || mu.op == "TUD" || mu.op == "TCO";
    if (label_targeted && ds.task != Task::classification) {
        throw std::invalid_argument("mutation: " + mu.op + " applies to classification only");
    }

    Dataset out = ds;
    TrainSpec out_spec = spec;

    if (mu.op == "TCL") {
        check_percentage(mu.param);
        if (mu.target_label < 0 || mu.target_label >= ds.num_classes) {
            throw std::invalid_argument("mutation: TCL target label out of range");
        }
        const std::vector<std::size_t> eligible = rows_with_label(out.train, mu.target_label);
        const std::size_t k = affected_row_count(mu.param, eligible.size());
        for (std::size_t row : choose_rows(eligible, k, rng)) {
            const std::size_t other = rng.uniform_index(ds.num_classes - 1);
            const int new_label = static_cast<int>(other) >= mu.target_label
                                      ? static_cast<int>(other) + 1
                                      : static_cast<int>(other);
            out.train.labels[row] = new_label;
        }
    } else if (mu.op == "TRD") {
        check_percentage(mu.param);
        std::vector<std::size_t> eligible(out.train.size());
        for (std::size_t r = 0; r < eligible.size(); ++r) {
            eligible[r] = r;
        }
        const std::size_t k = affected_row_count(mu.param, eligible.size());
        erase_rows(out.train, out.task, choose_rows(eligible, k, rng));
    } else if (mu.op == "TUD") {
        check_percentage(mu.param);
        if (mu.target_label < 0 || mu.target_label >= ds.num_classes) {
            throw std::invalid_argument("mutation: TUD target label out of range");
        }
        const std::vector<std::size_t> eligible = rows_with_label(out.train, mu.target_label);
        const std::size_t k = affected_row_count(mu.param, eligible.size());
        erase_rows(out.train, out.task, choose_rows(eligible, k, rng));
    } else if (mu.op == "TAN") {
        check_percentage(mu.param);
        const std::vector<double> sigma = per_feature_std(out.train, out.input_dim);
        std::vector<std::size_t> eligible(out.train.size());
        for (std::size_t r = 0; r < eligible.size(); ++r) {
            eligible[r] = r;
        }
        const std::size_t k = affected_row_count(mu.param, eligible.size());
        for (std::size_t row : choose_rows(eligible, k, rng)) {
            for (int f = 0; f < out.input_dim; ++f) {
                out.train.inputs[row][f] += rng.normal() * 0.1 * sigma[f];
            }
        }
    } else if (mu.op == "TCO") {
        check_percentage(mu.param);
        if (mu.target_label < 0 || mu.target_label >= ds.num_classes ||
            mu.second_label < 0 || mu.second_label >= ds.num_classes ||
            mu.target_label == mu.second_label) {
            throw std::invalid_argument("mutation: TCO needs two distinct in-range labels");
        }
        const std::vector<std::size_t> eligible = rows_with_label(out.train, mu.target_label);
        const std::vector<std::size_t> others = rows_with_label(out.train, mu.second_label);
        if (others.empty()) {
            throw std::invalid_argument("mutation: TCO blend class has no rows");
        }
        const std::size_t k = affected_row_count(mu.param, eligible.size());
        for (std::size_t row : choose_rows(eligible, k, rng)) {
            const std::size_t partner = others[rng.uniform_index(others.size())];
            for (int f = 0; f < out.input_dim; ++f) {
                out.train.inputs[row][f] =
                    0.5 * out.train.inputs[row][f] + 0.5 * out.train.inputs[partner][f];
            }
        }
    } else if (mu.op == "HLR") {
        if (!(mu.param > 0.0)) {
            throw std::invalid_argument("mutation: HLR learning rate must be positive");
        }
        out_spec.learning_rate = mu.param;
    } else if (mu.op == "HNE") {
        if (mu.param < 0.0) {
            throw std::invalid_argument("mutation: HNE epoch count must be non-negative");
        }
        out_spec.epochs = static_cast<int>(std::lround(mu.param));
    } else if (mu.op == "ACH") {
        const std::size_t colon = mu.discrete_value.find(':');
        if (colon == std::string::npos) {
            throw std::invalid_argument("mutation: ACH value must be 'layer:activation'");
        }
        const int layer = parse_layer_index(mu.discrete_value.substr(0, colon),
                                            out_spec.hidden_sizes.size());
        out_spec.activations[static_cast<std::size_t>(layer)] =
            mu.discrete_value.substr(colon + 1);
    } else if (mu.op == "ARM") {
        const int layer = parse_layer_index(mu.discrete_value, out_spec.hidden_sizes.size());
        out_spec.activations[static_cast<std::size_t>(layer)] = "linear";
    } else { // WCI
        out_spec.weight_init = mu.discrete_value;
    }

    validate(out_spec);
    validate(out);
    return {std::move(out), std::move(out_spec)};
}

ModelInstanceSet build_instances(const Dataset& ds, const TrainSpec& spec,
                                 const std::optional<MutationSpec>& mu, int n,
                                 std::uint64_t base_seed) {
    if (n < 1) {
        throw std::invalid_argument("build_instances: need at least one instance");
    }
    ModelInstanceSet set;
    set.mutation = mu;
    set.base_seed = base_seed;
    for (int k = 0; k < n; ++k) {
        const std::uint64_t instance_seed = base_seed + static_cast<std::uint64_t>(k);
        try {
            Dataset local = ds;
            TrainSpec local_spec = spec;
            if (mu.has_value()) {
                Rng mutation_rng(instance_seed);
                std::tie(local, local_spec) = apply_mutation(ds, spec, *mu, mutation_rng);
            }
            local_spec.rng_seed = instance_seed;
            set.instances.push_back(train(local, local_spec));
        } catch (const TrainingDiverged& e) {
            throw TrainingDiverged("build_instances: instance " + std::to_string(k) + ": " +
                                   e.what());
        } catch (const std::exception& e) {
            throw std::runtime_error("build_instances: instance " + std::to_string(k) + ": " +
                                     e.what());
        }
    }
    return set;
}

} // namespace metisforge::harness
