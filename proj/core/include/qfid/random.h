// Copyright 2026 The qfid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QFID_RANDOM_H
#define QFID_RANDOM_H

#include <cstdint>
#include <random>

namespace qfid {

/// All stochastic code draws from 64-bit Mersenne Twister (MT19937-64), whose
/// output sequence is fixed by the C++ standard for a given seed.
using Rng = std::mt19937_64;

/// Independent stream for one worker: seeded with base_seed + worker_index.
inline Rng make_stream(uint64_t base_seed, uint64_t worker_index = 0) {
    return Rng{base_seed + worker_index};
}

/// Uniform double in [0, 1) from the top 53 bits of one 64-bit draw.
inline double uniform01(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace qfid

#endif
