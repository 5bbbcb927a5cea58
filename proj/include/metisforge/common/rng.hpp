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

#ifndef METISFORGE_COMMON_RNG_HPP
#define METISFORGE_COMMON_RNG_HPP

#include <cstdint>
#include <vector>

namespace metisforge {

/// Deterministic random source (xoshiro256** seeded via splitmix64).
///
/// The standard <random> distributions are implementation-defined, which
/// breaks the byte-identical reproducibility contract the archives and
/// reports rely on. All sampling goes through the explicit draws below.
class Rng {
  public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    /// Uniform double in [0, 1).
    double uniform();

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi);

    /// Uniform index in [0, n). n must be positive. Unbiased (rejection).
    std::size_t uniform_index(std::size_t n);

    /// Uniform integer in [lo, hi], both ends inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

    /// Standard normal via Box-Muller (stateful: caches the spare value).
    double normal();
    double normal(double mean, double stddev);

    bool coin_flip();

    /// Fisher-Yates shuffle of an index permutation 0..n-1.
    std::vector<std::size_t> permutation(std::size_t n);

    /// Derives an independent stream for sub-tasks (per-instance seeds etc).
    std::uint64_t derive_seed(std::uint64_t stream);

  private:
    std::uint64_t state_[4];
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

/// splitmix64 step, also used to mix keys for derived seeds.
std::uint64_t splitmix64(std::uint64_t& state);

} // namespace metisforge

#endif
