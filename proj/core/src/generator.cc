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

#include "assocmem/generator.h"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "assocmem/hebbian.h"

namespace assocmem {

// ---------------------------------------------------------------------------
// Decomposition

GeneratorMatrix GeneratorMatrix::decompose(const InterconnectionMatrix &weights) {
    // InterconnectionMatrix already guarantees symmetry and a zero diagonal,
    // which makes the strict lower triangle the unique solution.
    const size_t n = weights.size();
    std::vector<std::int64_t> b(n * n, 0);
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < i; j++) {
            b[i * n + j] = weights(i, j);
        }
    }
    return GeneratorMatrix(n, std::move(b));
}

InterconnectionMatrix GeneratorMatrix::reconstruct() const {
    std::vector<std::int64_t> t(n_ * n_, 0);
    for (size_t i = 0; i < n_; i++) {
        for (size_t j = 0; j < n_; j++) {
            t[i * n_ + j] = (*this)(i, j) + (*this)(j, i);
        }
    }
    return InterconnectionMatrix(n_, std::move(t));
}

GeneratorMatrix decompose(const InterconnectionMatrix &weights) {
    return GeneratorMatrix::decompose(weights);
}

// ---------------------------------------------------------------------------
// Ordering

SpreadOrder::SpreadOrder(std::vector<size_t> permutation, size_t start_count)
    : permutation_(std::move(permutation)), position_(permutation_.size()), start_count_(start_count) {
    const size_t n = permutation_.size();
    if (n == 0) {
        throw std::invalid_argument("SpreadOrder: need at least one neuron");
    }
    if (start_count_ == 0 || start_count_ > n) {
        throw std::invalid_argument("SpreadOrder: start set must be nonempty and fit in the network");
    }
    std::vector<bool> seen(n, false);
    for (size_t p = 0; p < n; p++) {
        size_t v = permutation_[p];
        if (v >= n || seen[v]) {
            throw std::invalid_argument("SpreadOrder: permutation is not a bijection");
        }
        seen[v] = true;
        position_[v] = p;
    }
    if (!std::is_sorted(permutation_.begin(), permutation_.begin() + static_cast<std::ptrdiff_t>(start_count_))) {
        throw std::invalid_argument("SpreadOrder: start set must be listed in increasing index order");
    }
}

namespace {

std::vector<size_t> checked_start_set(size_t n, std::span<const size_t> start_set) {
    if (start_set.empty()) {
        throw std::invalid_argument("start set is empty");
    }
    std::vector<size_t> sorted(start_set.begin(), start_set.end());
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); i++) {
        if (sorted[i] >= n) {
            std::ostringstream ss;
            ss << "start neuron " << (sorted[i] + 1) << " is out of range 1.." << n;
            throw std::invalid_argument(ss.str());
        }
        if (i && sorted[i] == sorted[i - 1]) {
            std::ostringstream ss;
            ss << "start neuron " << (sorted[i] + 1) << " listed twice";
            throw std::invalid_argument(ss.str());
        }
    }
    return sorted;
}

}  // namespace

SpreadOrder SpreadOrder::by_index(size_t n, std::span<const size_t> start_set) {
    auto perm = checked_start_set(n, start_set);
    size_t start_count = perm.size();
    std::vector<bool> in_start(n, false);
    for (size_t v : perm) {
        in_start[v] = true;
    }
    for (size_t v = 0; v < n; v++) {
        if (!in_start[v]) {
            perm.push_back(v);
        }
    }
    return SpreadOrder(std::move(perm), start_count);
}

SpreadOrder order_from_proximity(const ProximityMatrix &proximity, std::span<const size_t> start_set) {
    const size_t n = proximity.size();
    auto perm = checked_start_set(n, start_set);
    const size_t start_count = perm.size();

    std::vector<double> dist(n, std::numeric_limits<double>::infinity());
    std::vector<bool> in_start(n, false);
    for (size_t s : perm) {
        in_start[s] = true;
    }
    std::vector<size_t> rest;
    for (size_t v = 0; v < n; v++) {
        if (in_start[v]) {
            continue;
        }
        for (size_t s : perm) {
            dist[v] = std::min(dist[v], proximity(s, v));
        }
        rest.push_back(v);
    }
    std::stable_sort(rest.begin(), rest.end(), [&](size_t a, size_t b) {
        return dist[a] < dist[b];
    });
    perm.insert(perm.end(), rest.begin(), rest.end());
    return SpreadOrder(std::move(perm), start_count);
}

// ---------------------------------------------------------------------------
// Spreading

namespace {

std::int64_t row_field(const GeneratorMatrix &b, size_t row, const Fragment &f) {
    std::int64_t acc = 0;
    for (size_t j = 0; j < row; j++) {
        acc += b(row, j) * *f.value(j);
    }
    return acc;
}

bool disagrees(std::int64_t field, Spin held) {
    return field != 0 && sign_of_field(field) != held;
}

}  // namespace

std::vector<size_t> inconsistent_rows(const GeneratorMatrix &b, const Fragment &f) {
    require_same_size(b.size(), f.size(), "inconsistent_rows");
    auto k = f.prefix_length();
    if (!k) {
        throw std::invalid_argument("inconsistent_rows: fragment is not prefix-shaped");
    }
    std::vector<size_t> out;
    for (size_t j = 0; j < *k; j++) {
        if (disagrees(row_field(b, j, f), *f.value(j))) {
            out.push_back(j);
        }
    }
    return out;
}

SpreadStepResult spread_step(const GeneratorMatrix &b, const Fragment &f) {
    require_same_size(b.size(), f.size(), "spread_step");
    auto k = f.prefix_length();
    if (!k) {
        throw std::invalid_argument("spread_step: fragment is not prefix-shaped in spread coordinates");
    }
    if (*k == 0) {
        throw std::invalid_argument("spread_step: fragment is empty");
    }
    if (*k == f.size()) {
        throw std::invalid_argument("spread_step: fragment is already complete");
    }
    std::int64_t field = row_field(b, *k, f);
    Spin value = sign_of_field(field);
    Fragment next = f.with_assigned(*k, value);
    auto flags = inconsistent_rows(b, next);
    return SpreadStepResult{std::move(next), SpreadStepRecord{*k, field, value}, std::move(flags)};
}

std::vector<size_t> start_neurons(const StartAssignment &start) {
    std::vector<size_t> out;
    out.reserve(start.size());
    for (const auto &nv : start) {
        out.push_back(nv.neuron);
    }
    std::sort(out.begin(), out.end());
    return out;
}

SpreadTrace spread_full(const InterconnectionMatrix &weights, const SpreadOrder &order, const StartAssignment &start) {
    const size_t n = weights.size();
    require_same_size(n, order.size(), "spread_full");
    if (start.empty()) {
        throw std::invalid_argument("spread_full: start assignment is empty");
    }
    // Validates range and duplicates.
    Fragment original = Fragment::from_start(n, start);
    auto starts = start_neurons(start);
    if (!std::equal(starts.begin(), starts.end(), order.start_set().begin(), order.start_set().end())) {
        throw std::invalid_argument("spread_full: start assignment does not match the order's start set");
    }

    auto perm = order.permutation();
    GeneratorMatrix b = decompose(weights.relabeled(perm));

    // Spread coordinates: position p holds neuron perm[p].
    Fragment f(n);
    for (size_t p = 0; p < order.start_count(); p++) {
        f = f.with_assigned(p, *original.value(perm[p]), true);
    }
    std::vector<size_t> local_flags = inconsistent_rows(b, f);

    std::vector<Spin> values(n);
    for (size_t p = 0; p < order.start_count(); p++) {
        values[p] = *f.value(p);
    }
    std::vector<SpreadStepRecord> steps;
    steps.reserve(n - order.start_count());
    for (size_t k = order.start_count(); k < n; k++) {
        // Rows only read columns j < k, all of which are already assigned.
        std::int64_t field = 0;
        for (size_t j = 0; j < k; j++) {
            field += b(k, j) * values[j];
        }
        values[k] = sign_of_field(field);
        steps.push_back(SpreadStepRecord{perm[k], field, values[k]});
    }

    std::vector<Spin> final_values(n);
    for (size_t p = 0; p < n; p++) {
        final_values[perm[p]] = values[p];
    }
    std::vector<size_t> flags;
    for (size_t p : local_flags) {
        flags.push_back(perm[p]);
    }
    std::sort(flags.begin(), flags.end());
    return SpreadTrace{order, std::move(steps), BipolarVector(std::move(final_values)), std::move(flags)};
}

SpreadTrace spread_full(const InterconnectionMatrix &weights, const ProximityMatrix &proximity, const StartAssignment &start) {
    require_same_size(weights.size(), proximity.size(), "spread_full");
    if (start.empty()) {
        throw std::invalid_argument("spread_full: start assignment is empty");
    }
    return spread_full(weights, order_from_proximity(proximity, start_neurons(start)), start);
}

RetrievalReport retrieve_report(const InterconnectionMatrix &weights,
                                const SpreadOrder &order,
                                const StartAssignment &start,
                                std::span<const BipolarVector> memories) {
    RetrievalReport report{spread_full(weights, order, start), std::nullopt, std::nullopt};
    const BipolarVector &final_state = report.trace.final_state;
    report.fixed_point = is_stored(weights, final_state);
    if (memories.empty()) {
        return report;
    }
    report.nearest_distance = std::numeric_limits<size_t>::max();
    for (size_t k = 0; k < memories.size(); k++) {
        size_t d = hamming_distance(memories[k], final_state);
        if (d == 0 && !report.matched_memory) {
            report.matched_memory = k;
        }
        if (d == final_state.size() && !report.matched_complement) {
            report.matched_complement = k;
        }
        if (d < report.nearest_distance) {
            report.nearest_distance = d;
            report.nearest_memory = k;
        }
    }
    return report;
}

RetrievalReport retrieve_report(const InterconnectionMatrix &weights,
                                const ProximityMatrix &proximity,
                                const StartAssignment &start,
                                std::span<const BipolarVector> memories) {
    require_same_size(weights.size(), proximity.size(), "retrieve_report");
    if (start.empty()) {
        throw std::invalid_argument("retrieve_report: start assignment is empty");
    }
    return retrieve_report(weights, order_from_proximity(proximity, start_neurons(start)), start, memories);
}

}  // namespace assocmem
