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

#include "assocmem/quantum.h"

#include <cmath>
#include <random>
#include <set>

#include "gtest/gtest.h"

using namespace assocmem;

namespace {

std::vector<size_t> histogram(const std::vector<size_t> &draws, size_t k) {
    std::vector<size_t> counts(k, 0);
    for (size_t d : draws) {
        counts.at(d)++;
    }
    return counts;
}

}  // namespace

TEST(reorg_count, examples) {
    ASSERT_EQ(reorg_count(10), 100u);
    ASSERT_EQ(reorg_count(1), 1u);
    ASSERT_EQ(reorg_count(37), 1369u);
    ASSERT_THROW(reorg_count(0), std::invalid_argument);
    ASSERT_THROW(reorg_count(-3), std::invalid_argument);
    for (std::int64_t n = 1; n <= 100; n++) {
        ASSERT_EQ(reorg_count(n), static_cast<std::uint64_t>(n * n));
    }
}

TEST(enumerate_reorganizations, counts_and_pairing) {
    for (std::int64_t n = 1; n <= 12; n++) {
        auto table = enumerate_reorganizations(n);
        ASSERT_EQ(table.raw_cases.size(), static_cast<size_t>(2 * n * n));
        ASSERT_EQ(table.distinct_count, reorg_count(n));
        std::set<ReorganizationCase> covered;
        for (const auto &c : table.cases) {
            ASSERT_EQ(c.outcome, 0);
            covered.insert(c);
            covered.insert(constraint_partner(c));
        }
        ASSERT_EQ(covered.size(), table.raw_cases.size());
        for (const auto &c : table.raw_cases) {
            auto p = constraint_partner(c);
            ASSERT_NE(p, c);
            ASSERT_EQ(constraint_partner(p), c);
        }
    }
}

TEST(enumerate_reorganizations, grid) {
    auto table = enumerate_reorganizations(3);
    ASSERT_EQ(table.grid, (std::vector<double>{0.0, 0.5, 1.0}));
    ASSERT_EQ(enumerate_reorganizations(1).grid, (std::vector<double>{1.0}));
}

TEST(AmplitudeVector, validation) {
    ASSERT_THROW(AmplitudeVector({1.0}), std::invalid_argument);
    ASSERT_THROW(AmplitudeVector({0.5, 0.5}), std::invalid_argument);
    ASSERT_THROW(AmplitudeVector({NAN, 1.0}), std::invalid_argument);
    ASSERT_NO_THROW(AmplitudeVector({0.6, -0.8}));
    ASSERT_NO_THROW(AmplitudeVector({1.0 + 1e-10, 0.0}));
}

TEST(collapse_sample, deterministic_basis_states) {
    auto zero = collapse_sample(AmplitudeVector({1.0, 0.0}), 1, 1000);
    ASSERT_EQ(histogram(zero, 2), (std::vector<size_t>{1000, 0}));
    auto one = collapse_sample(AmplitudeVector({0.0, 1.0}), 1, 1000);
    ASSERT_EQ(histogram(one, 2), (std::vector<size_t>{0, 1000}));
    auto middle = collapse_sample(AmplitudeVector({0.0, 1.0, 0.0}), 3, 1000);
    ASSERT_EQ(histogram(middle, 3), (std::vector<size_t>{0, 1000, 0}));
}

TEST(collapse_sample, born_frequencies) {
    const size_t draws = 100000;
    auto counts = histogram(collapse_sample(AmplitudeVector({0.6, 0.8}), 7, draws), 2);
    double f0 = static_cast<double>(counts[0]) / draws;
    double se = std::sqrt(0.36 * 0.64 / draws);
    ASSERT_NEAR(f0, 0.36, 3 * se);

    auto uniform = histogram(collapse_sample(AmplitudeVector({0.5, 0.5, 0.5, 0.5}), 8, draws), 4);
    for (size_t c : uniform) {
        ASSERT_NEAR(static_cast<double>(c) / draws, 0.25, 0.013);
    }
}

TEST(collapse_sample, depends_only_on_squared_amplitudes) {
    auto a = collapse_sample(AmplitudeVector({0.6, 0.8}), 11, 500);
    auto b = collapse_sample(AmplitudeVector({-0.6, 0.8}), 11, 500);
    auto c = collapse_sample(AmplitudeVector({0.6, -0.8}), 11, 500);
    ASSERT_EQ(a, b);
    ASSERT_EQ(a, c);
}

TEST(collapse_sample, deterministic_in_seed) {
    AmplitudeVector amps({0.5, 0.5, 0.5, 0.5});
    ASSERT_EQ(collapse_sample(amps, 42, 1000), collapse_sample(amps, 42, 1000));
    ASSERT_NE(collapse_sample(amps, 42, 1000), collapse_sample(amps, 43, 1000));
    ASSERT_THROW(collapse_sample(amps, 42, 0), std::invalid_argument);
}

TEST(collapse_as_selection, labels_are_one_based) {
    auto s = collapse_as_selection(AmplitudeVector({0.0, 1.0}), 5);
    ASSERT_EQ(s.index, 1u);
    ASSERT_EQ(s.label, "output 2");
    ASSERT_DOUBLE_EQ(s.probability, 1.0);
}
