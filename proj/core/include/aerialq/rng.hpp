// Copyright 2026 The aerialq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

namespace aerialq {

/// Seeded random stream with platform-independent draws.
///
/// The standard distributions are implementation-defined, so replay would
/// differ between standard libraries. Draws here are derived directly from
/// the raw 64-bit mt19937_64 output, whose sequence is fixed by the standard.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) {
        // Rejection keeps the draw unbiased for every n.
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = engine_();
        while (v >= limit) v = engine_();
        return v % n;
    }

    /// Independent child stream; the parent advances by one draw.
    RandomStream fork() { return RandomStream(mix(engine_())); }

    /// SplitMix64 finalizer, used to derive well-separated seeds.
    static constexpr std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Seed for a named sub-purpose of a scenario seed (users, mobility, learning).
    static constexpr std::uint64_t derive(std::uint64_t seed, std::uint64_t salt) {
        return mix(seed ^ mix(salt));
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace aerialq
