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
 * Outer-product (Hebbian) training and full-network recall.
 *
 * A state x is "stored" when one synchronous pass x -> sgn(T x) leaves it
 * unchanged. Iterated synchronous recall and asynchronous (one neuron at a
 * time) recall are provided for experiments; the latter descends the energy
 * E(x) = -1/2 x^T T x.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "assocmem/types.h"

namespace assocmem {

/// T[i][j] = sum_k x^k[i] x^k[j] for i != j, zero diagonal. Unnormalized integer sum.
/// Throws std::invalid_argument on an empty list, DimensionMismatch on unequal widths.
InterconnectionMatrix train(std::span<const BipolarVector> memories);
InterconnectionMatrix train(const MemorySet &memories);

/// One synchronous pass: sgn(T x) componentwise.
BipolarVector recall_sync(const InterconnectionMatrix &weights, const BipolarVector &x);

/// recall_sync(T, x) == x.
bool is_stored(const InterconnectionMatrix &weights, const BipolarVector &x);

/// -1/2 x^T T x.
double energy(const InterconnectionMatrix &weights, const BipolarVector &x);

enum class Schedule {
    kCyclic,             ///< neurons 0..n-1 every pass
    kRandomPermutation,  ///< fresh seeded permutation each pass
};

struct AsyncOptions {
    Schedule schedule = Schedule::kCyclic;
    /// nullopt means 10 * n. Zero is rejected.
    std::optional<size_t> max_passes;
    /// Only consulted by kRandomPermutation.
    std::uint64_t seed = 0;
};

struct RecallResult {
    BipolarVector state;
    /// Passes performed, including the final pass that confirmed the fixed point.
    size_t iterations = 0;
    bool converged = false;
    /// Energy of the start state followed by the energy after every flip.
    std::vector<double> energy_trace;
};

RecallResult recall_async(const InterconnectionMatrix &weights, const BipolarVector &x, const AsyncOptions &options = {});

struct SyncTrajectory {
    BipolarVector state;
    size_t passes = 0;
    bool converged = false;
    /// When the dynamics revisit an earlier state other than a fixed point, the
    /// repeating states in order. Symmetric T gives at most a 2-cycle.
    std::vector<BipolarVector> cycle;
};

/// Repeated synchronous passes until a state repeats or max_passes is hit.
SyncTrajectory recall_sync_iterated(
    const InterconnectionMatrix &weights, const BipolarVector &x, std::optional<size_t> max_passes = std::nullopt);

}  // namespace assocmem
