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

/**
 * @file
 * Ground truth and statistics for Hebbian networks: exhaustive fixed-point
 * enumeration, stored/complement/spurious classification, Monte Carlo
 * capacity sweeps, and the zero-field complement asymmetry probe.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "assocmem/types.h"

namespace assocmem {

inline constexpr size_t kDefaultEnumerationLimit = 20;
/// Hard ceiling regardless of the caller's limit (state index must fit in 64 bits).
inline constexpr size_t kMaxEnumerableNeurons = 40;

/// Every x in {+1,-1}^n with sgn(T x) == x, in lexicographic order (-1 < +1,
/// neuron 0 most significant). Throws std::invalid_argument if n > limit_n.
std::vector<BipolarVector> enumerate_fixed_points(
    const InterconnectionMatrix &weights, size_t limit_n = kDefaultEnumerationLimit);

enum class AttractorKind {
    kStored,
    kComplement,
    kSpurious,
};

std::string_view to_string(AttractorKind kind);

struct ClassifiedAttractor {
    BipolarVector state;
    AttractorKind kind;
    /// The memory it equals (stored) or negates (complement).
    std::optional<size_t> memory_index;
};

struct AttractorCensus {
    std::vector<ClassifiedAttractor> fixed_points;
    size_t stored_count = 0;
    size_t complement_count = 0;
    size_t spurious_count = 0;
};

/// Stored takes precedence over complement. `memories` may be empty.
AttractorCensus classify(std::span<const BipolarVector> fixed_points, std::span<const BipolarVector> memories);

struct CapacityOptions {
    size_t n = 100;
    std::vector<size_t> m_values;
    size_t trials = 200;
    std::uint64_t seed = 0;
    /// Worker threads; 0 means hardware concurrency. Never affects results.
    unsigned threads = 1;
};

struct CapacityRow {
    size_t m = 0;
    size_t trials = 0;
    std::uint64_t unstable_bits = 0;
    std::uint64_t total_bits = 0;
    std::uint64_t all_stable_trials = 0;
    /// unstable_bits / total_bits.
    double per_bit_instability = 0;
    /// Binomial standard error of per_bit_instability.
    double per_bit_standard_error = 0;
    double all_stable_fraction = 0;
};

struct CapacityReport {
    /// Both capacity readings use this stability level.
    static constexpr double kStabilityLevel = 0.99;

    size_t n = 0;
    size_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<CapacityRow> rows;  // sorted by m
    /// Largest m/n whose per-bit stability (1 - instability) is >= 99%.
    double threshold_capacity_ratio = 0;
    /// Largest m/n whose all-memories-exact rate is >= 99%.
    double exact_threshold_capacity_ratio = 0;

    /// Instability never drops by more than 2 combined standard errors between
    /// consecutive rows.
    bool instability_monotone_within_noise() const;
};

/// Trials draw i.i.d. uniform bipolar memories from stream (seed, m, trial).
/// Requires n >= 10, trials >= 50, nonempty m_values with every m >= 1.
CapacityReport capacity_experiment(const CapacityOptions &options);

struct ComplementFailure {
    size_t memory_index;
    /// Components i with (T x)_i == 0; sgn(0) = +1 is what breaks -x there.
    std::vector<size_t> zero_field_components;
};

struct ComplementProbe {
    /// Memories that are fixed points (the ones whose complement was tested).
    std::vector<size_t> stored_memories;
    std::vector<ComplementFailure> failures;
};

ComplementProbe complement_asymmetry_probe(const InterconnectionMatrix &weights, std::span<const BipolarVector> memories);

}  // namespace assocmem
