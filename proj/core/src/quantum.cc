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

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "assocmem/random.h"

namespace assocmem {

AmplitudeVector::AmplitudeVector(std::vector<double> amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() < 2) {
        throw std::invalid_argument("AmplitudeVector: need at least two basis states");
    }
    for (double a : amplitudes_) {
        if (!std::isfinite(a)) {
            throw std::invalid_argument("AmplitudeVector: amplitudes must be finite");
        }
    }
    check_normalized();
}

void AmplitudeVector::check_normalized() const {
    double total = 0;
    for (double a : amplitudes_) {
        total += a * a;
    }
    if (!(std::abs(total - 1.0) <= kNormTolerance)) {
        std::ostringstream ss;
        ss.precision(17);
        ss << "AmplitudeVector: squared amplitudes sum to " << total << ", not 1";
        throw std::invalid_argument(ss.str());
    }
}

std::uint64_t reorg_count(std::int64_t n_levels) {
    if (n_levels < 1) {
        throw std::invalid_argument("reorg_count: resolution must be at least 1");
    }
    auto n = static_cast<std::uint64_t>(n_levels);
    if (n > std::numeric_limits<std::uint32_t>::max()) {
        throw std::invalid_argument("reorg_count: resolution too large");
    }
    // 2 n^2 raw cases, halved by the amplitude-constraint pairing.
    return (2 * n * n) / 2;
}

ReorganizationCase constraint_partner(const ReorganizationCase &c) {
    return ReorganizationCase{c.b_index, c.a_index, 1 - c.outcome};
}

ReorganizationTable enumerate_reorganizations(std::int64_t n_levels) {
    const std::uint64_t expected = reorg_count(n_levels);
    const auto n = static_cast<size_t>(n_levels);
    if (n > 4096) {
        throw std::invalid_argument("enumerate_reorganizations: resolution too large to tabulate");
    }

    ReorganizationTable table;
    table.n_levels = n;
    table.grid.resize(n);
    for (size_t i = 0; i < n; i++) {
        table.grid[i] = n == 1 ? 1.0 : static_cast<double>(i) / static_cast<double>(n - 1);
    }
    table.raw_cases.reserve(2 * n * n);
    for (size_t a = 0; a < n; a++) {
        for (size_t b = 0; b < n; b++) {
            for (int o = 0; o <= 1; o++) {
                table.raw_cases.push_back({a, b, o});
            }
        }
    }
    // Each orbit {c, partner(c)} has exactly one outcome-0 member.
    for (const auto &c : table.raw_cases) {
        ReorganizationCase p = constraint_partner(c);
        if (std::min(c, p) == c) {
            table.cases.push_back(c.outcome == 0 ? c : p);
        }
    }
    std::sort(table.cases.begin(), table.cases.end());
    table.distinct_count = table.cases.size();
    if (table.distinct_count != expected) {
        throw std::logic_error("enumerate_reorganizations: quotient size disagrees with reorg_count");
    }
    return table;
}

std::vector<size_t> collapse_sample(const AmplitudeVector &amps, std::uint64_t seed, size_t count) {
    if (count == 0) {
        throw std::invalid_argument("collapse_sample: count must be at least 1");
    }
    amps.check_normalized();

    std::vector<double> cdf(amps.size());
    double running = 0;
    for (size_t i = 0; i < amps.size(); i++) {
        running += amps.probability(i);
        cdf[i] = running;
    }
    // Dividing by the exact total makes the last nonzero bin end at exactly 1.
    for (auto &c : cdf) {
        c /= running;
    }

    std::mt19937_64 rng = derive_stream(seed, {0x636F6C6CULL});
    std::vector<size_t> out(count);
    for (auto &o : out) {
        double u = uniform_open_closed(rng);
        o = static_cast<size_t>(std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    }
    return out;
}

Selection collapse_as_selection(const AmplitudeVector &amps, std::uint64_t seed) {
    size_t index = collapse_sample(amps, seed, 1).front();
    std::ostringstream note;
    note << "basis state " << (index + 1) << " of " << amps.size()
         << " selected; equivalently the network settles on output " << (index + 1) << " of " << amps.size();
    return Selection{index, "output " + std::to_string(index + 1), amps.probability(index), note.str()};
}

}  // namespace assocmem
