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

#ifndef METISFORGE_COMMON_HASH_HPP
#define METISFORGE_COMMON_HASH_HPP

#include <cstdint>
#include <cstring>
#include <string>
#include <vector>

namespace metisforge {

/// Incremental FNV-1a (64-bit). Used for model fingerprints, dataset hashes
/// and evaluation memo keys.
class Fnv1a {
  public:
    static constexpr std::uint64_t kOffset = 1469598103934665603ULL;
    static constexpr std::uint64_t kPrime = 1099511628211ULL;

    Fnv1a() = default;

    Fnv1a& bytes(const void* data, std::size_t len) {
        const auto* p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < len; ++i) {
            h_ ^= p[i];
            h_ *= kPrime;
        }
        return *this;
    }

    Fnv1a& u8(std::uint8_t v) { return bytes(&v, 1); }

    Fnv1a& u32(std::uint32_t v) { return bytes(&v, 4); }

    Fnv1a& u64(std::uint64_t v) { return bytes(&v, 8); }

    Fnv1a& f64(double v) {
        std::uint64_t bits;
        std::memcpy(&bits, &v, 8);
        return u64(bits);
    }

    Fnv1a& str(const std::string& s) {
        u64(s.size());
        return bytes(s.data(), s.size());
    }

    template <typename T>
    Fnv1a& span_f64(const T& values) {
        u64(values.size());
        for (double v : values) {
            f64(v);
        }
        return *this;
    }

    std::uint64_t value() const { return h_; }

  private:
    std::uint64_t h_ = kOffset;
};

inline std::uint64_t hash_bytes(const void* data, std::size_t len) {
    return Fnv1a().bytes(data, len).value();
}

} // namespace metisforge

#endif
