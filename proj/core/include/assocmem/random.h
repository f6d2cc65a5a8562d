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

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>

#include "assocmem/types.h"

namespace assocmem {

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Deterministic engine for stream (seed, keys...). Streams with different keys are
/// independent of each other and of the order in which they are created.
std::mt19937_64 derive_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> keys);

/// Uniform double in (0, 1], 53 bits of resolution.
double uniform_open_closed(std::mt19937_64 &rng);

/// n i.i.d. uniform bipolar entries.
BipolarVector random_bipolar(size_t n, std::mt19937_64 &rng);

}  // namespace assocmem
