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
 * Domain types shared by every part of the library: bipolar neuron states,
 * the symmetric interconnection matrix, pairwise neuron proximities, and
 * partially-assigned fragments used to seed spreading retrieval.
 *
 * Neuron indices are 0-based everywhere in the API. User-facing text
 * (reports, CLI arguments) is 1-based and converts at the boundary.
 */

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "assocmem/errors.h"

namespace assocmem {

/// A single neuron value: +1 or -1.
using Spin = std::int8_t;

/// Returns +1 for v >= 0 and -1 for v < 0. Zero maps to +1.
/// Throws std::invalid_argument on NaN or infinity.
Spin sgn(double v);

/// Integer-field variant of sgn. Total; no validation needed.
constexpr Spin sign_of_field(std::int64_t field) noexcept {
    return field >= 0 ? Spin{1} : Spin{-1};
}

constexpr bool is_spin(int v) noexcept {
    return v == 1 || v == -1;
}

/// State of n >= 1 neurons, each exactly +1 or -1.
class BipolarVector {
   public:
    explicit BipolarVector(std::vector<Spin> values);
    static BipolarVector from_ints(std::span<const int> values);
    static BipolarVector filled(size_t n, Spin value);

    size_t size() const noexcept {
        return values_.size();
    }
    Spin operator[](size_t i) const noexcept {
        return values_[i];
    }
    std::span<const Spin> values() const noexcept {
        return values_;
    }

    BipolarVector negated() const;

    /// "(1,-1,1)"
    std::string str() const;

    friend bool operator==(const BipolarVector &, const BipolarVector &) = default;
    /// Lexicographic with -1 ordered before +1.
    friend auto operator<=>(const BipolarVector &, const BipolarVector &) = default;

   private:
    std::vector<Spin> values_;
};

size_t hamming_distance(const BipolarVector &a, const BipolarVector &b);

/// Symmetric, zero-diagonal integer weight matrix T.
class InterconnectionMatrix {
   public:
    /// Validates shape, symmetry and zero diagonal; throws std::invalid_argument otherwise.
    InterconnectionMatrix(size_t n, std::vector<std::int64_t> row_major);
    static InterconnectionMatrix from_rows(const std::vector<std::vector<std::int64_t>> &rows);
    static InterconnectionMatrix zeros(size_t n);

    size_t size() const noexcept {
        return n_;
    }
    std::int64_t operator()(size_t i, size_t j) const noexcept {
        return entries_[i * n_ + j];
    }
    std::span<const std::int64_t> row(size_t i) const noexcept {
        return {entries_.data() + i * n_, n_};
    }
    std::span<const std::int64_t> entries() const noexcept {
        return entries_;
    }

    /// The local field T x.
    std::vector<std::int64_t> field(const BipolarVector &x) const;
    /// Component i of T x.
    std::int64_t field_at(const BipolarVector &x, size_t i) const;

    /// c * T for c > 0.
    InterconnectionMatrix scaled(std::int64_t c) const;
    /// Relabels neurons: result(a, b) = T(perm[a], perm[b]).
    InterconnectionMatrix relabeled(std::span<const size_t> perm) const;

    std::vector<std::vector<std::int64_t>> rows() const;

    friend bool operator==(const InterconnectionMatrix &, const InterconnectionMatrix &) = default;

   private:
    size_t n_;
    std::vector<std::int64_t> entries_;
};

/// Pairwise neuron distances. Symmetric, zero diagonal, strictly positive off the
/// diagonal. The triangle inequality is deliberately not checked.
class ProximityMatrix {
   public:
    static constexpr double kSymmetryTolerance = 1e-9;

    ProximityMatrix(size_t n, std::vector<double> row_major);
    static ProximityMatrix from_rows(const std::vector<std::vector<double>> &rows);
    /// All off-diagonal distances equal to 1; every ordering falls back to index order.
    static ProximityMatrix uniform(size_t n);

    size_t size() const noexcept {
        return n_;
    }
    double operator()(size_t i, size_t j) const noexcept {
        return entries_[i * n_ + j];
    }

   private:
    size_t n_;
    std::vector<double> entries_;
};

/// One caller-provided neuron assignment.
struct NeuronValue {
    size_t neuron;
    Spin value;

    friend bool operator==(const NeuronValue &, const NeuronValue &) = default;
};

using StartAssignment = std::vector<NeuronValue>;

/// Partial state. Unassigned is a distinct third state, never encoded as 0.
/// Clamped neurons are the ones supplied by the caller as the original fragment.
class Fragment {
   public:
    explicit Fragment(size_t n);
    /// Every listed neuron is assigned and clamped. Duplicate or out-of-range
    /// indices throw std::invalid_argument.
    static Fragment from_start(size_t n, const StartAssignment &start);

    size_t size() const noexcept {
        return values_.size();
    }
    bool is_assigned(size_t i) const noexcept {
        return values_[i].has_value();
    }
    bool is_clamped(size_t i) const noexcept {
        return clamped_[i];
    }
    std::optional<Spin> value(size_t i) const noexcept {
        return values_[i];
    }
    size_t assigned_count() const noexcept;
    bool complete() const noexcept {
        return assigned_count() == size();
    }

    /// Returns k when exactly neurons [0, k) are assigned, nullopt otherwise.
    std::optional<size_t> prefix_length() const noexcept;

    /// Copy with neuron i assigned. Throws std::logic_error if i already holds a value.
    Fragment with_assigned(size_t i, Spin v, bool clamp = false) const;

    /// Requires complete().
    BipolarVector to_vector() const;

    friend bool operator==(const Fragment &, const Fragment &) = default;

   private:
    std::vector<std::optional<Spin>> values_;
    std::vector<bool> clamped_;
};

/// A validated memory set: nonempty, all vectors the same width.
struct MemorySet {
    size_t n = 0;
    std::vector<BipolarVector> memories;
    /// Pairs (i, j), i < j, of identical memories. Permitted, only reported.
    std::vector<std::pair<size_t, size_t>> duplicates;

    size_t m() const noexcept {
        return memories.size();
    }
};

/// Throws std::invalid_argument on an empty list, DimensionMismatch on unequal widths.
MemorySet validate_memory_set(std::vector<BipolarVector> memories);
/// Raw-integer variant; additionally rejects entries outside {+1, -1}.
MemorySet validate_memory_set(const std::vector<std::vector<int>> &memories);

/// Throws DimensionMismatch when the sizes differ. `what` names the operation.
void require_same_size(size_t expected, size_t actual, const char *what);

}  // namespace assocmem
