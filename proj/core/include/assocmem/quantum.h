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
 * Measurement collapse viewed as internal reorganization.
 *
 * A qubit a|0> + b|1> whose amplitudes each take n_levels discrete values has
 * 2 * n_levels^2 raw (a, b, outcome) cases. Pairing every case with its
 * amplitude-constraint partner halves that to n_levels^2 reorganizations.
 * Outcome sampling follows the Born rule, P(i) = a_i^2.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace assocmem {

/// Real amplitudes, k >= 2, sum of squares equal to 1 within 1e-9.
class AmplitudeVector {
   public:
    static constexpr double kNormTolerance = 1e-9;

    explicit AmplitudeVector(std::vector<double> amplitudes);

    size_t size() const noexcept {
        return amplitudes_.size();
    }
    std::span<const double> amplitudes() const noexcept {
        return amplitudes_;
    }
    double probability(size_t i) const noexcept {
        return amplitudes_[i] * amplitudes_[i];
    }

    /// Throws std::invalid_argument unless |sum a_i^2 - 1| <= kNormTolerance.
    void check_normalized() const;

   private:
    std::vector<double> amplitudes_;
};

/// n_levels^2. Throws std::invalid_argument for n_levels < 1 or on overflow.
std::uint64_t reorg_count(std::int64_t n_levels);

struct ReorganizationCase {
    size_t a_index;
    size_t b_index;
    int outcome;  // 0 or 1

    friend bool operator==(const ReorganizationCase &, const ReorganizationCase &) = default;
    friend auto operator<=>(const ReorganizationCase &, const ReorganizationCase &) = default;
};

/// (i, j, o) <-> (j, i, 1 - o). An involution without fixed points.
ReorganizationCase constraint_partner(const ReorganizationCase &c);

struct ReorganizationTable {
    size_t n_levels = 0;
    /// Amplitude value at each grid index, uniformly spaced over [0, 1].
    std::vector<double> grid;
    /// All 2 * n_levels^2 cases, ordered by (a_index, b_index, outcome).
    std::vector<ReorganizationCase> raw_cases;
    /// One representative (the outcome-0 member) per partner pair.
    std::vector<ReorganizationCase> cases;
    size_t distinct_count = 0;
};

ReorganizationTable enumerate_reorganizations(std::int64_t n_levels);

/// `count` i.i.d. outcome indices with P(i) = a_i^2, deterministic in `seed`.
/// Inverse CDF; a draw landing exactly on a bin boundary resolves to the lower index.
std::vector<size_t> collapse_sample(const AmplitudeVector &amps, std::uint64_t seed, size_t count);

struct Selection {
    size_t index;
    /// "output <index+1>" (user-facing, 1-based).
    std::string label;
    double probability;
    std::string note;
};

/// One draw of collapse_sample, presented as the selected output of a network
/// with one output per basis state.
Selection collapse_as_selection(const AmplitudeVector &amps, std::uint64_t seed);

}  // namespace assocmem
