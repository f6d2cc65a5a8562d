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

#include "assocmem/analysis.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <exception>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "assocmem/hebbian.h"
#include "assocmem/random.h"

namespace assocmem {

// ---------------------------------------------------------------------------
// Enumeration

std::vector<BipolarVector> enumerate_fixed_points(const InterconnectionMatrix &weights, size_t limit_n) {
    const size_t n = weights.size();
    if (n > limit_n || n > kMaxEnumerableNeurons) {
        std::ostringstream ss;
        ss << "enumerate_fixed_points: n = " << n << " exceeds the enumeration limit of "
           << std::min(limit_n, kMaxEnumerableNeurons);
        throw std::invalid_argument(ss.str());
    }

    // Walk all 2^n states in Gray-code order so each step flips one neuron and
    // the field updates in O(n). Bit b of the code is neuron n-1-b.
    std::vector<Spin> s(n, Spin{-1});
    std::vector<std::int64_t> h = weights.field(BipolarVector(s));
    auto is_fixed = [&]() {
        for (size_t i = 0; i < n; i++) {
            if (sign_of_field(h[i]) != s[i]) {
                return false;
            }
        }
        return true;
    };

    std::vector<std::uint64_t> codes;
    const std::uint64_t total = std::uint64_t{1} << n;
    if (is_fixed()) {
        codes.push_back(0);
    }
    for (std::uint64_t i = 1; i < total; i++) {
        auto bit = static_cast<size_t>(std::countr_zero(i));
        size_t v = n - 1 - bit;
        std::int64_t delta = s[v] > 0 ? -2 : 2;
        s[v] = static_cast<Spin>(s[v] + delta);
        for (size_t j = 0; j < n; j++) {
            h[j] += weights(j, v) * delta;
        }
        if (is_fixed()) {
            codes.push_back(i ^ (i >> 1));
        }
    }

    std::sort(codes.begin(), codes.end());
    std::vector<BipolarVector> out;
    out.reserve(codes.size());
    for (std::uint64_t code : codes) {
        std::vector<Spin> x(n);
        for (size_t i = 0; i < n; i++) {
            x[i] = (code >> (n - 1 - i)) & 1 ? Spin{1} : Spin{-1};
        }
        out.emplace_back(std::move(x));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Classification

std::string_view to_string(AttractorKind kind) {
    switch (kind) {
        case AttractorKind::kStored:
            return "stored";
        case AttractorKind::kComplement:
            return "complement";
        case AttractorKind::kSpurious:
            return "spurious";
    }
    return "unknown";
}

AttractorCensus classify(std::span<const BipolarVector> fixed_points, std::span<const BipolarVector> memories) {
    AttractorCensus census;
    for (const auto &x : fixed_points) {
        ClassifiedAttractor item{x, AttractorKind::kSpurious, std::nullopt};
        for (size_t k = 0; k < memories.size(); k++) {
            require_same_size(memories[k].size(), x.size(), "classify");
            if (memories[k] == x) {
                item.kind = AttractorKind::kStored;
                item.memory_index = k;
                break;
            }
        }
        if (item.kind != AttractorKind::kStored) {
            BipolarVector neg = x.negated();
            for (size_t k = 0; k < memories.size(); k++) {
                if (memories[k] == neg) {
                    item.kind = AttractorKind::kComplement;
                    item.memory_index = k;
                    break;
                }
            }
        }
        switch (item.kind) {
            case AttractorKind::kStored:
                census.stored_count++;
                break;
            case AttractorKind::kComplement:
                census.complement_count++;
                break;
            case AttractorKind::kSpurious:
                census.spurious_count++;
                break;
        }
        census.fixed_points.push_back(std::move(item));
    }
    return census;
}

// ---------------------------------------------------------------------------
// Capacity

namespace {

struct TrialCounts {
    std::uint64_t unstable_bits = 0;
    bool all_stable = false;
};

TrialCounts run_capacity_trial(size_t n, size_t m, std::uint64_t seed, size_t trial) {
    std::mt19937_64 rng = derive_stream(seed, {static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(trial)});
    std::vector<BipolarVector> memories;
    memories.reserve(m);
    for (size_t k = 0; k < m; k++) {
        memories.push_back(random_bipolar(n, rng));
    }
    InterconnectionMatrix weights = train(memories);

    TrialCounts counts;
    for (const auto &x : memories) {
        auto h = weights.field(x);
        for (size_t i = 0; i < n; i++) {
            counts.unstable_bits += sign_of_field(h[i]) != x[i];
        }
    }
    counts.all_stable = counts.unstable_bits == 0;
    if (m == 1 && !counts.all_stable) {
        throw std::logic_error("capacity_experiment: a single trained memory was not a fixed point");
    }
    return counts;
}

}  // namespace

bool CapacityReport::instability_monotone_within_noise() const {
    for (size_t j = 1; j < rows.size(); j++) {
        const auto &a = rows[j - 1];
        const auto &b = rows[j];
        double slack = 2.0 * std::sqrt(a.per_bit_standard_error * a.per_bit_standard_error +
                                       b.per_bit_standard_error * b.per_bit_standard_error);
        if (b.per_bit_instability < a.per_bit_instability - slack) {
            return false;
        }
    }
    return true;
}

CapacityReport capacity_experiment(const CapacityOptions &options) {
    if (options.n < 10) {
        throw std::invalid_argument("capacity_experiment: n must be at least 10");
    }
    if (options.trials < 50) {
        throw std::invalid_argument("capacity_experiment: trials must be at least 50");
    }
    if (options.m_values.empty()) {
        throw std::invalid_argument("capacity_experiment: m_values is empty");
    }
    std::vector<size_t> ms = options.m_values;
    std::sort(ms.begin(), ms.end());
    if (ms.front() == 0) {
        throw std::invalid_argument("capacity_experiment: every m must be at least 1");
    }
    if (std::adjacent_find(ms.begin(), ms.end()) != ms.end()) {
        throw std::invalid_argument("capacity_experiment: m_values contains duplicates");
    }

    const size_t trials = options.trials;
    const size_t task_count = ms.size() * trials;
    std::vector<TrialCounts> results(task_count);

    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<size_t>(threads, task_count));

    // Each task writes only its own slot; aggregation below is a fixed-order sum.
    auto worker = [&](unsigned id) {
        for (size_t t = id; t < task_count; t += threads) {
            results[t] = run_capacity_trial(options.n, ms[t / trials], options.seed, t % trials);
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::exception_ptr> errors(threads);
        {
            std::vector<std::jthread> pool;
            for (unsigned id = 0; id < threads; id++) {
                pool.emplace_back([&, id] {
                    try {
                        worker(id);
                    } catch (...) {
                        errors[id] = std::current_exception();
                    }
                });
            }
        }
        for (auto &e : errors) {
            if (e) {
                std::rethrow_exception(e);
            }
        }
    }

    CapacityReport report;
    report.n = options.n;
    report.trials = trials;
    report.seed = options.seed;
    for (size_t mi = 0; mi < ms.size(); mi++) {
        CapacityRow row;
        row.m = ms[mi];
        row.trials = trials;
        row.total_bits = static_cast<std::uint64_t>(trials) * row.m * options.n;
        for (size_t t = 0; t < trials; t++) {
            const auto &r = results[mi * trials + t];
            row.unstable_bits += r.unstable_bits;
            row.all_stable_trials += r.all_stable;
        }
        double p = static_cast<double>(row.unstable_bits) / static_cast<double>(row.total_bits);
        row.per_bit_instability = p;
        row.per_bit_standard_error = std::sqrt(p * (1 - p) / static_cast<double>(row.total_bits));
        row.all_stable_fraction = static_cast<double>(row.all_stable_trials) / static_cast<double>(trials);

        double ratio = static_cast<double>(row.m) / static_cast<double>(options.n);
        // Integer forms of "stability >= 99%" so rounding cannot move the threshold.
        if (row.unstable_bits * 100 <= row.total_bits) {
            report.threshold_capacity_ratio = std::max(report.threshold_capacity_ratio, ratio);
        }
        if (row.all_stable_trials * 100 >= static_cast<std::uint64_t>(trials) * 99) {
            report.exact_threshold_capacity_ratio = std::max(report.exact_threshold_capacity_ratio, ratio);
        }
        report.rows.push_back(row);
    }
    return report;
}

// ---------------------------------------------------------------------------
// Complement asymmetry

ComplementProbe complement_asymmetry_probe(const InterconnectionMatrix &weights, std::span<const BipolarVector> memories) {
    ComplementProbe probe;
    for (size_t k = 0; k < memories.size(); k++) {
        const BipolarVector &x = memories[k];
        require_same_size(weights.size(), x.size(), "complement_asymmetry_probe");
        if (!is_stored(weights, x)) {
            continue;
        }
        probe.stored_memories.push_back(k);
        if (is_stored(weights, x.negated())) {
            continue;
        }
        auto h = weights.field(x);
        ComplementFailure failure{k, {}};
        for (size_t i = 0; i < h.size(); i++) {
            if (h[i] == 0) {
                failure.zero_field_components.push_back(i);
            }
        }
        probe.failures.push_back(std::move(failure));
    }
    return probe;
}

}  // namespace assocmem
