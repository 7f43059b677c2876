// Copyright 2026 The entsteer Authors
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

namespace entsteer {

/// SplitMix64 finalizer; a bijective 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27U)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31U);
}

/// Engine for draw `index` of the stream identified by `seed`.
///
/// Every draw owns an independent engine keyed only on (seed, index), so an
/// ensemble gives the same states whether it is evaluated serially, in
/// parallel, or as a prefix of a longer run.
inline std::mt19937_64 draw_engine(std::uint64_t seed, std::uint64_t index) {
    const std::uint64_t k0 = mix64(seed);
    const std::uint64_t k1 = mix64(k0 ^ mix64(index + 0x632be59bd9b4e019ULL));
    std::seed_seq seq{static_cast<std::uint32_t>(k0), static_cast<std::uint32_t>(k0 >> 32U),
                      static_cast<std::uint32_t>(k1), static_cast<std::uint32_t>(k1 >> 32U)};
    return std::mt19937_64(seq);
}

} // namespace entsteer
