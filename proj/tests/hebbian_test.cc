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
#include <random>

#include "gtest/gtest.h"
#include "test_util.h"

using namespace assocmem;
using namespace assocmem::testing;

TEST(train, two_memory_network) {
    auto t = train(two_memory_set());
    auto expected = InterconnectionMatrix::from_rows({
        {0, 0, 2, 0},
        {0, 0, 0, 2},
        {2, 0, 0, 0},
        {0, 2, 0, 0},
    });
    ASSERT_EQ(t, expected);
    ASSERT_EQ(to_mat(t), oracle::train({{1, 1, 1, 1}, {1, -1, 1, -1}}));
}

TEST(train, single_memory) {
    std::vector<BipolarVector> mem{bv({1, 1, -1})};
    ASSERT_EQ(train(mem), InterconnectionMatrix::from_rows({{0, 1, -1}, {1, 0, -1}, {-1, -1, 0}}));
}

TEST(train, memory_and_complement_doubles) {
    auto x = bv({1, -1, -1, 1, 1});
    std::vector<BipolarVector> one{x};
    std::vector<BipolarVector> pair{x, x.negated()};
    ASSERT_EQ(train(pair), train(one).scaled(2));
}

TEST(train, errors) {
    ASSERT_THROW(train(std::vector<BipolarVector>{}), std::invalid_argument);
    std::vector<BipolarVector> mixed{bv({1, 1}), bv({1, 1, 1})};
    ASSERT_THROW(train(mixed), DimensionMismatch);
}

TEST(train, matches_oracle_and_invariants_on_random_sets) {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 200; trial++) {
        auto net = random_network(1, 24, 12, rng);
        std::vector<oracle::Vec> raw;
        for (const auto &x : net.memories) {
            raw.push_back(to_vec(x));
        }
        ASSERT_EQ(to_mat(net.weights), oracle::train(raw));
        const auto m = static_cast<std::int64_t>(net.memories.size());
        for (size_t i = 0; i < net.weights.size(); i++) {
            ASSERT_EQ(net.weights(i, i), 0);
            for (size_t j = 0; j < net.weights.size(); j++) {
                ASSERT_EQ(net.weights(i, j), net.weights(j, i));
                if (i != j) {
                    ASSERT_LE(std::abs(net.weights(i, j)), m);
                    ASSERT_EQ((net.weights(i, j) - m) % 2, 0);
                }
            }
        }
    }
}

TEST(recall_sync, examples) {
    auto t = train(two_memory_set());
    ASSERT_EQ(recall_sync(t, bv({1, 1, 1, 1})), bv({1, 1, 1, 1}));
    ASSERT_EQ(recall_sync(t, bv({1, -1, 1, -1})), bv({1, -1, 1, -1}));
    ASSERT_EQ(recall_sync(InterconnectionMatrix::zeros(5), bv({-1, 1, -1, -1, 1})), BipolarVector::filled(5, 1));
    ASSERT_THROW(recall_sync(t, bv({1, 1})), DimensionMismatch);
}

TEST(is_stored, examples) {
    auto t = train(two_memory_set());
    ASSERT_TRUE(is_stored(t, bv({1, 1, 1, 1})));
    ASSERT_FALSE(is_stored(t, bv({1, 1, -1, 1})));
    ASSERT_EQ(recall_sync(t, bv({1, 1, -1, 1})), bv({-1, 1, 1, 1}));
    ASSERT_THROW(is_stored(t, bv({1})), DimensionMismatch);
}

TEST(is_stored, single_memory_always_stored) {
    std::mt19937_64 rng(2);
    for (size_t n = 2; n <= 40; n++) {
        auto x = random_bipolar(n, rng);
        std::vector<BipolarVector> mem{x};
        auto t = train(mem);
        ASSERT_TRUE(is_stored(t, x));
        auto h = t.field(x);
        for (size_t i = 0; i < n; i++) {
            ASSERT_EQ(h[i], static_cast<std::int64_t>(n - 1) * x[i]);
        }
    }
}

TEST(energy, examples) {
    auto t = train(two_memory_set());
    ASSERT_EQ(energy(t, bv({1, 1, 1, 1})), -4.0);
    ASSERT_EQ(energy(InterconnectionMatrix::zeros(3), bv({1, -1, 1})), 0.0);
    std::mt19937_64 rng(3);
    for (int k = 0; k < 100; k++) {
        auto net = random_network(2, 20, 6, rng);
        auto x = random_bipolar(net.weights.size(), rng);
        ASSERT_EQ(energy(net.weights, x), energy(net.weights, x.negated()));
        ASSERT_EQ(energy(net.weights, x), oracle::energy(to_mat(net.weights), to_vec(x)));
    }
    ASSERT_THROW(energy(t, bv({1})), DimensionMismatch);
}

TEST(recall_sync, scale_and_permutation_invariance) {
    std::mt19937_64 rng(4);
    for (int k = 0; k < 300; k++) {
        auto net = random_network(2, 20, 8, rng);
        const size_t n = net.weights.size();
        auto x = random_bipolar(n, rng);
        auto y = recall_sync(net.weights, x);

        auto c = std::uniform_int_distribution<std::int64_t>(1, 9)(rng);
        ASSERT_EQ(recall_sync(net.weights.scaled(c), x), y);

        std::vector<size_t> perm(n);
        std::iota(perm.begin(), perm.end(), size_t{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        // relabeled(perm)(a, b) = T(perm[a], perm[b]); permuted vector px[a] = x[perm[a]].
        auto permute = [&](const BipolarVector &v) {
            std::vector<Spin> out(n);
            for (size_t a = 0; a < n; a++) {
                out[a] = v[perm[a]];
            }
            return BipolarVector(out);
        };
        ASSERT_EQ(recall_sync(net.weights.relabeled(perm), permute(x)), permute(y));
    }
}

TEST(recall_sync, complement_property_when_no_zero_field) {
    std::mt19937_64 rng(5);
    size_t checked = 0;
    for (int k = 0; k < 300; k++) {
        auto net = random_network(2, 14, 5, rng);
        for (const auto &x : net.memories) {
            if (!is_stored(net.weights, x)) {
                continue;
            }
            auto h = net.weights.field(x);
            if (std::find(h.begin(), h.end(), 0) != h.end()) {
                continue;
            }
            checked++;
            ASSERT_TRUE(is_stored(net.weights, x.negated()));
        }
    }
    ASSERT_GT(checked, 100u);
}

TEST(recall_async, starts_at_fixed_point) {
    auto t = train(two_memory_set());
    auto r = recall_async(t, bv({1, -1, 1, -1}));
    ASSERT_TRUE(r.converged);
    ASSERT_EQ(r.iterations, 1u);
    ASSERT_EQ(r.state, bv({1, -1, 1, -1}));
    ASSERT_EQ(r.energy_trace, (std::vector<double>{-4.0}));
}

TEST(recall_async, worked_example_cyclic) {
    // Frozen from oracle::async_cyclic: neuron 1 sees field -2 first and flips,
    // landing on the complement of the second memory.
    auto t = train(two_memory_set());
    auto r = recall_async(t, bv({1, 1, -1, 1}), {Schedule::kCyclic, std::nullopt, 0});
    auto o = oracle::async_cyclic(to_mat(t), {1, 1, -1, 1}, 40);
    ASSERT_EQ(to_vec(r.state), o.state);
    ASSERT_EQ(r.energy_trace, o.trace);
    ASSERT_EQ(r.state, bv({-1, 1, -1, 1}));
    ASSERT_EQ(r.energy_trace, (std::vector<double>{0.0, -4.0}));
    ASSERT_TRUE(r.converged);
    ASSERT_EQ(r.iterations, 2u);
}

TEST(recall_async, zero_weights_go_to_all_ones_in_one_pass) {
    auto r = recall_async(InterconnectionMatrix::zeros(4), bv({-1, -1, 1, -1}));
    ASSERT_EQ(r.state, BipolarVector::filled(4, 1));
    // One pass of flips, one confirming pass.
    ASSERT_EQ(r.iterations, 2u);
    for (double e : r.energy_trace) {
        ASSERT_EQ(e, 0.0);
    }
}

TEST(recall_async, errors) {
    auto t = train(two_memory_set());
    ASSERT_THROW(recall_async(t, bv({1, 1})), DimensionMismatch);
    ASSERT_THROW(recall_async(t, bv({1, 1, 1, 1}), {Schedule::kCyclic, size_t{0}, 0}), std::invalid_argument);
}

TEST(recall_async, energy_never_increases) {
    std::mt19937_64 rng(6);
    for (int k = 0; k < 500; k++) {
        // Arbitrary symmetric matrices exercise zero fields far more than Hebbian ones.
        const size_t n = std::uniform_int_distribution<size_t>(1, 30)(rng);
        auto t = k % 2 ? random_symmetric(n, rng, -2, 2) : random_network(n, n, 6, rng).weights;
        auto x = random_bipolar(n, rng);
        AsyncOptions options{k % 3 ? Schedule::kRandomPermutation : Schedule::kCyclic, std::nullopt, std::uint64_t(k)};
        auto r = recall_async(t, x, options);
        ASSERT_TRUE(r.converged);
        ASSERT_TRUE(is_stored(t, r.state));
        ASSERT_EQ(r.energy_trace.front(), energy(t, x));
        ASSERT_EQ(r.energy_trace.back(), energy(t, r.state));
        for (size_t i = 1; i < r.energy_trace.size(); i++) {
            ASSERT_LE(r.energy_trace[i], r.energy_trace[i - 1]);
        }
    }
}

TEST(recall_async, cyclic_matches_oracle) {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 200; k++) {
        auto net = random_network(2, 16, 6, rng);
        auto x = random_bipolar(net.weights.size(), rng);
        auto r = recall_async(net.weights, x);
        auto o = oracle::async_cyclic(to_mat(net.weights), to_vec(x), 10 * net.weights.size());
        ASSERT_EQ(to_vec(r.state), o.state);
        ASSERT_EQ(r.energy_trace, o.trace);
    }
}

TEST(recall_async, random_schedule_is_deterministic_in_seed) {
    std::mt19937_64 rng(8);
    auto net = random_network(30, 30, 8, rng);
    auto x = random_bipolar(30, rng);
    AsyncOptions options{Schedule::kRandomPermutation, std::nullopt, 99};
    auto a = recall_async(net.weights, x, options);
    auto b = recall_async(net.weights, x, options);
    ASSERT_EQ(a.state, b.state);
    ASSERT_EQ(a.energy_trace, b.energy_trace);
}

TEST(recall_sync_iterated, converges_or_reports_two_cycle) {
    auto t = train(two_memory_set());
    auto fixed = recall_sync_iterated(t, bv({1, 1, 1, 1}));
    ASSERT_TRUE(fixed.converged);
    ASSERT_EQ(fixed.passes, 1u);
    ASSERT_TRUE(fixed.cycle.empty());

    // Two neurons coupled negatively, both +1: synchronous update flips both forever.
    auto anti = InterconnectionMatrix::from_rows({{0, -1}, {-1, 0}});
    auto osc = recall_sync_iterated(anti, bv({1, 1}));
    ASSERT_FALSE(osc.converged);
    ASSERT_EQ(osc.cycle, (std::vector<BipolarVector>{bv({1, 1}), bv({-1, -1})}));

    ASSERT_THROW(recall_sync_iterated(t, bv({1, 1, 1, 1}), size_t{0}), std::invalid_argument);
}

TEST(recall_sync_iterated, cycles_have_length_at_most_two) {
    std::mt19937_64 rng(9);
    for (int k = 0; k < 300; k++) {
        const size_t n = std::uniform_int_distribution<size_t>(2, 16)(rng);
        auto t = random_symmetric(n, rng);
        auto r = recall_sync_iterated(t, random_bipolar(n, rng), 1000);
        ASSERT_TRUE(r.converged || !r.cycle.empty());
        ASSERT_LE(r.cycle.size(), 2u);
    }
}
