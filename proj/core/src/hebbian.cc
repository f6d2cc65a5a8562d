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

#include "assocmem/hebbian.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "assocmem/random.h"

namespace assocmem {

namespace {

size_t resolve_max_passes(std::optional<size_t> requested, size_t n) {
    if (!requested) {
        return 10 * n;
    }
    if (*requested == 0) {
        throw std::invalid_argument("max_passes must be at least 1");
    }
    return *requested;
}

std::int64_t quadratic_form(const InterconnectionMatrix &weights, const BipolarVector &x) {
    auto h = weights.field(x);
    std::int64_t q = 0;
    for (size_t i = 0; i < x.size(); i++) {
        q += h[i] * x[i];
    }
    return q;
}

}  // namespace

InterconnectionMatrix train(std::span<const BipolarVector> memories) {
    if (memories.empty()) {
        throw std::invalid_argument("train: memory set is empty");
    }
    size_t n = memories.front().size();
    for (const auto &x : memories) {
        require_same_size(n, x.size(), "train");
    }
    std::vector<std::int64_t> t(n * n, 0);
    for (const auto &x : memories) {
        for (size_t i = 0; i < n; i++) {
            std::int64_t xi = x[i];
            std::int64_t *row = t.data() + i * n;
            for (size_t j = 0; j < n; j++) {
                row[j] += xi * x[j];
            }
        }
    }
    for (size_t i = 0; i < n; i++) {
        t[i * n + i] = 0;
    }
    return InterconnectionMatrix(n, std::move(t));
}

InterconnectionMatrix train(const MemorySet &memories) {
    return train(std::span<const BipolarVector>(memories.memories));
}

BipolarVector recall_sync(const InterconnectionMatrix &weights, const BipolarVector &x) {
    auto h = weights.field(x);
    std::vector<Spin> out(h.size());
    std::transform(h.begin(), h.end(), out.begin(), sign_of_field);
    return BipolarVector(std::move(out));
}

bool is_stored(const InterconnectionMatrix &weights, const BipolarVector &x) {
    auto h = weights.field(x);
    for (size_t i = 0; i < h.size(); i++) {
        if (sign_of_field(h[i]) != x[i]) {
            return false;
        }
    }
    return true;
}

double energy(const InterconnectionMatrix &weights, const BipolarVector &x) {
    return static_cast<double>(-quadratic_form(weights, x)) / 2;
}

RecallResult recall_async(const InterconnectionMatrix &weights, const BipolarVector &x, const AsyncOptions &options) {
    const size_t n = weights.size();
    require_same_size(n, x.size(), "recall_async");
    const size_t max_passes = resolve_max_passes(options.max_passes, n);

    std::vector<Spin> s(x.values().begin(), x.values().end());
    std::vector<std::int64_t> h = weights.field(x);
    // Track q = x^T T x exactly; E = -q/2.
    std::int64_t q = quadratic_form(weights, x);

    RecallResult result{x, 0, false, {static_cast<double>(-q) / 2}};

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), size_t{0});
    std::mt19937_64 rng = derive_stream(options.seed, {0x617379ULL});

    for (size_t pass = 0; pass < max_passes; pass++) {
        if (options.schedule == Schedule::kRandomPermutation) {
            std::iota(order.begin(), order.end(), size_t{0});
            std::shuffle(order.begin(), order.end(), rng);
        }
        bool flipped = false;
        for (size_t i : order) {
            Spin next = sign_of_field(h[i]);
            if (next == s[i]) {
                continue;
            }
            std::int64_t delta = next - s[i];
            // T[i][i] == 0, so h[i] is unaffected by the flip itself.
            q += 2 * delta * h[i];
            s[i] = next;
            for (size_t j = 0; j < n; j++) {
                h[j] += weights(j, i) * delta;
            }
            result.energy_trace.push_back(static_cast<double>(-q) / 2);
            flipped = true;
        }
        result.iterations = pass + 1;
        if (!flipped) {
            result.converged = true;
            break;
        }
    }
    result.state = BipolarVector(std::move(s));
    return result;
}

SyncTrajectory recall_sync_iterated(
    const InterconnectionMatrix &weights, const BipolarVector &x, std::optional<size_t> max_passes) {
    require_same_size(weights.size(), x.size(), "recall_sync_iterated");
    const size_t limit = resolve_max_passes(max_passes, weights.size());

    std::vector<BipolarVector> history{x};
    SyncTrajectory out{x, 0, false, {}};
    for (size_t pass = 0; pass < limit; pass++) {
        BipolarVector next = recall_sync(weights, history.back());
        out.passes = pass + 1;
        if (next == history.back()) {
            out.state = std::move(next);
            out.converged = true;
            return out;
        }
        auto seen = std::find(history.begin(), history.end(), next);
        if (seen != history.end()) {
            out.cycle.assign(seen, history.end());
            out.state = std::move(next);
            return out;
        }
        history.push_back(std::move(next));
    }
    out.state = history.back();
    return out;
}

}  // namespace assocmem
