// Copyright 2026 The assocmem Authors
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

#include "assocmem/random.h"

namespace assocmem {

std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::mt19937_64 derive_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> keys) {
    std::uint64_t h = mix64(seed);
    for (std::uint64_t k : keys) {
        h = mix64(h ^ mix64(k + 0x632BE59BD9B4E019ULL));
    }
    return std::mt19937_64(h);
}

double uniform_open_closed(std::mt19937_64 &rng) {
    return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

BipolarVector random_bipolar(size_t n, std::mt19937_64 &rng) {
    std::vector<Spin> out(n);
    std::uint64_t bits = 0;
    for (size_t i = 0; i < n; i++) {
        if (i % 64 == 0) {
            bits = rng();
        }
        out[i] = (bits & 1) ? Spin{1} : Spin{-1};
        bits >>= 1;
    }
    return BipolarVector(std::move(out));
}

}  // namespace assocmem
