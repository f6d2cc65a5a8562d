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
 * Generator-matrix retrieval.
 *
 * T is split as T = B + B^T with B strictly lower triangular. Retrieval
 * starts from a clamped fragment and assigns one neuron per step with
 * value sgn((B f)[k]). Neurons are visited in "spread coordinates": a
 * permutation that puts the start set first and then orders the remaining
 * neurons by their distance to the start set. In those coordinates the
 * assigned neurons always form a prefix, so row k of B only ever reads
 * neurons that already hold a value.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "assocmem/types.h"

namespace assocmem {

/// Strictly lower-triangular integer matrix with B + B^T equal to its source T.
class GeneratorMatrix {
   public:
    static GeneratorMatrix decompose(const InterconnectionMatrix &weights);

    size_t size() const noexcept {
        return n_;
    }
    std::int64_t operator()(size_t i, size_t j) const noexcept {
        return entries_[i * n_ + j];
    }
    /// B + B^T.
    InterconnectionMatrix reconstruct() const;

   private:
    GeneratorMatrix(size_t n, std::vector<std::int64_t> entries) : n_(n), entries_(std::move(entries)) {
    }

    size_t n_;
    std::vector<std::int64_t> entries_;
};

GeneratorMatrix decompose(const InterconnectionMatrix &weights);

/// Order in which neurons receive activity. permutation[p] is the neuron visited
/// at position p; the start set occupies the leading positions, sorted by index.
class SpreadOrder {
   public:
    /// Validates that `permutation` is a bijection on 0..n-1 whose first
    /// `start_count` entries are the start set (in increasing index order).
    SpreadOrder(std::vector<size_t> permutation, size_t start_count);

    /// Start set first (by index), then the rest in index order.
    static SpreadOrder by_index(size_t n, std::span<const size_t> start_set);

    size_t size() const noexcept {
        return permutation_.size();
    }
    std::span<const size_t> permutation() const noexcept {
        return permutation_;
    }
    std::span<const size_t> start_set() const noexcept {
        return {permutation_.data(), start_count_};
    }
    size_t start_count() const noexcept {
        return start_count_;
    }
    /// Inverse permutation lookup.
    size_t position_of(size_t neuron) const noexcept {
        return position_[neuron];
    }

   private:
    std::vector<size_t> permutation_;
    std::vector<size_t> position_;
    size_t start_count_;
};

/// Non-start neurons sorted by increasing minimum distance to any start
/// neuron, ties broken by smaller index.
SpreadOrder order_from_proximity(const ProximityMatrix &proximity, std::span<const size_t> start_set);

struct SpreadStepRecord {
    size_t neuron;
    std::int64_t field;
    Spin value;

    friend bool operator==(const SpreadStepRecord &, const SpreadStepRecord &) = default;
};

struct SpreadStepResult {
    Fragment fragment;
    SpreadStepRecord record;
    /// Assigned rows j whose recomputed field (B f)[j] is nonzero and of opposite
    /// sign to the held value. Never includes the newly assigned neuron.
    std::vector<size_t> inconsistent;
};

/// Rows of B over an assigned prefix that disagree with their held value (see
/// SpreadStepResult::inconsistent).
std::vector<size_t> inconsistent_rows(const GeneratorMatrix &b, const Fragment &f);

/// One update in spread coordinates. `f` must assign exactly neurons [0, k)
/// with 1 <= k < n; neuron k receives sgn(sum_{j<k} B[k][j] f[j]).
SpreadStepResult spread_step(const GeneratorMatrix &b, const Fragment &f);

struct SpreadTrace {
    SpreadOrder order;
    /// One record per assigned neuron, in original neuron indices.
    std::vector<SpreadStepRecord> steps;
    BipolarVector final_state;
    /// Original neuron indices, sorted, without repeats.
    std::vector<size_t> consistency_flags;
};

SpreadTrace spread_full(const InterconnectionMatrix &weights, const SpreadOrder &order, const StartAssignment &start);
SpreadTrace spread_full(const InterconnectionMatrix &weights, const ProximityMatrix &proximity, const StartAssignment &start);

struct RetrievalReport {
    SpreadTrace trace;
    /// Index of the stored memory equal to the final state, if any.
    std::optional<size_t> matched_memory;
    /// Index of a memory whose negation equals the final state, if any.
    std::optional<size_t> matched_complement;
    /// Closest memory by Hamming distance (lowest index on ties).
    size_t nearest_memory = 0;
    size_t nearest_distance = 0;
    /// Final state satisfies sgn(T x) == x.
    bool fixed_point = false;
};

RetrievalReport retrieve_report(const InterconnectionMatrix &weights,
                                const SpreadOrder &order,
                                const StartAssignment &start,
                                std::span<const BipolarVector> memories);
RetrievalReport retrieve_report(const InterconnectionMatrix &weights,
                                const ProximityMatrix &proximity,
                                const StartAssignment &start,
                                std::span<const BipolarVector> memories);

/// Sorted neuron indices of a start assignment.
std::vector<size_t> start_neurons(const StartAssignment &start);

}  // namespace assocmem
