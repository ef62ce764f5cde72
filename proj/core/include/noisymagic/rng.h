// Copyright 2026 The noisymagic Authors
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

#ifndef NOISYMAGIC_RNG_H
#define NOISYMAGIC_RNG_H

#include <cstdint>
#include <random>

namespace noisymagic {

using Rng = std::mt19937_64;

/// Independent stream for (seed, stream index). Used to give each shot its
/// own generator so results do not depend on scheduling.
inline Rng stream_rng(uint64_t seed, uint64_t stream) {
    std::seed_seq seq{
        static_cast<uint32_t>(seed),
        static_cast<uint32_t>(seed >> 32),
        static_cast<uint32_t>(stream),
        static_cast<uint32_t>(stream >> 32),
    };
    return Rng(seq);
}

/// Uniform double in [0, 1) from the top 53 bits. Avoids the
/// implementation-defined std distributions so streams are portable.
inline double uniform01(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace noisymagic

#endif
