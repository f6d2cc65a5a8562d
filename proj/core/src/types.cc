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

#include "assocmem/types.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace assocmem {

ParseError::ParseError(const std::string &message, size_t line, size_t column, std::string token)
    : std::runtime_error(message), line_(line), column_(column), token_(std::move(token)) {
}

Spin sgn(double v) {
    if (!std::isfinite(v)) {
        throw std::invalid_argument("sgn: input is not a finite real");
    }
    return v >= 0 ? Spin{1} : Spin{-1};
}

void require_same_size(size_t expected, size_t actual, const char *what) {
    if (expected != actual) {
        std::ostringstream ss;
        ss << what << ": dimension mismatch (expected " << expected << ", got " << actual << ")";
        throw DimensionMismatch(ss.str());
    }
}

// ---------------------------------------------------------------------------
// BipolarVector

BipolarVector::BipolarVector(std::vector<Spin> values) : values_(std::move(values)) {
    if (values_.empty()) {
        throw std::invalid_argument("BipolarVector: need at least one neuron");
    }
    for (size_t i = 0; i < values_.size(); i++) {
        if (!is_spin(values_[i])) {
            std::ostringstream ss;
            ss << "BipolarVector: entry " << (i + 1) << " is " << int{values_[i]} << ", not +1 or -1";
            throw std::invalid_argument(ss.str());
        }
    }
}

BipolarVector BipolarVector::from_ints(std::span<const int> values) {
    std::vector<Spin> out;
    out.reserve(values.size());
    for (size_t i = 0; i < values.size(); i++) {
        if (!is_spin(values[i])) {
            std::ostringstream ss;
            ss << "BipolarVector: entry " << (i + 1) << " is " << values[i] << ", not +1 or -1";
            throw std::invalid_argument(ss.str());
        }
        out.push_back(static_cast<Spin>(values[i]));
    }
    return BipolarVector(std::move(out));
}

BipolarVector BipolarVector::filled(size_t n, Spin value) {
    return BipolarVector(std::vector<Spin>(n, value));
}

BipolarVector BipolarVector::negated() const {
    std::vector<Spin> out(values_.size());
    std::transform(values_.begin(), values_.end(), out.begin(), [](Spin s) {
        return static_cast<Spin>(-s);
    });
    return BipolarVector(std::move(out));
}

std::string BipolarVector::str() const {
    std::string out = "(";
    for (size_t i = 0; i < values_.size(); i++) {
        if (i) {
            out += ',';
        }
        out += values_[i] > 0 ? "1" : "-1";
    }
    out += ')';
    return out;
}

size_t hamming_distance(const BipolarVector &a, const BipolarVector &b) {
    require_same_size(a.size(), b.size(), "hamming_distance");
    size_t d = 0;
    for (size_t i = 0; i < a.size(); i++) {
        d += a[i] != b[i];
    }
    return d;
}

// ---------------------------------------------------------------------------
// InterconnectionMatrix

InterconnectionMatrix::InterconnectionMatrix(size_t n, std::vector<std::int64_t> row_major)
    : n_(n), entries_(std::move(row_major)) {
    if (n_ == 0) {
        throw std::invalid_argument("InterconnectionMatrix: need at least one neuron");
    }
    if (entries_.size() != n_ * n_) {
        throw DimensionMismatch("InterconnectionMatrix: entry count is not n*n");
    }
    for (size_t i = 0; i < n_; i++) {
        if ((*this)(i, i) != 0) {
            std::ostringstream ss;
            ss << "InterconnectionMatrix: nonzero diagonal at (" << (i + 1) << ", " << (i + 1) << ")";
            throw std::invalid_argument(ss.str());
        }
        for (size_t j = i + 1; j < n_; j++) {
            if ((*this)(i, j) != (*this)(j, i)) {
                std::ostringstream ss;
                ss << "InterconnectionMatrix: asymmetric at (" << (i + 1) << ", " << (j + 1) << ")";
                throw std::invalid_argument(ss.str());
            }
        }
    }
}

InterconnectionMatrix InterconnectionMatrix::from_rows(const std::vector<std::vector<std::int64_t>> &rows) {
    size_t n = rows.size();
    std::vector<std::int64_t> flat;
    flat.reserve(n * n);
    for (const auto &r : rows) {
        require_same_size(n, r.size(), "InterconnectionMatrix (square rows)");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return InterconnectionMatrix(n, std::move(flat));
}

InterconnectionMatrix InterconnectionMatrix::zeros(size_t n) {
    return InterconnectionMatrix(n, std::vector<std::int64_t>(n * n, 0));
}

std::vector<std::int64_t> InterconnectionMatrix::field(const BipolarVector &x) const {
    require_same_size(n_, x.size(), "field");
    std::vector<std::int64_t> out(n_, 0);
    for (size_t i = 0; i < n_; i++) {
        const std::int64_t *r = entries_.data() + i * n_;
        std::int64_t acc = 0;
        for (size_t j = 0; j < n_; j++) {
            acc += r[j] * x[j];
        }
        out[i] = acc;
    }
    return out;
}

std::int64_t InterconnectionMatrix::field_at(const BipolarVector &x, size_t i) const {
    require_same_size(n_, x.size(), "field_at");
    std::int64_t acc = 0;
    for (size_t j = 0; j < n_; j++) {
        acc += (*this)(i, j) * x[j];
    }
    return acc;
}

InterconnectionMatrix InterconnectionMatrix::scaled(std::int64_t c) const {
    if (c <= 0) {
        throw std::invalid_argument("InterconnectionMatrix::scaled: factor must be positive");
    }
    auto out = entries_;
    for (auto &e : out) {
        e *= c;
    }
    return InterconnectionMatrix(n_, std::move(out));
}

InterconnectionMatrix InterconnectionMatrix::relabeled(std::span<const size_t> perm) const {
    require_same_size(n_, perm.size(), "InterconnectionMatrix::relabeled");
    std::vector<std::int64_t> out(n_ * n_);
    for (size_t a = 0; a < n_; a++) {
        for (size_t b = 0; b < n_; b++) {
            out[a * n_ + b] = (*this)(perm[a], perm[b]);
        }
    }
    return InterconnectionMatrix(n_, std::move(out));
}

std::vector<std::vector<std::int64_t>> InterconnectionMatrix::rows() const {
    std::vector<std::vector<std::int64_t>> out;
    out.reserve(n_);
    for (size_t i = 0; i < n_; i++) {
        auto r = row(i);
        out.emplace_back(r.begin(), r.end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// ProximityMatrix

ProximityMatrix::ProximityMatrix(size_t n, std::vector<double> row_major) : n_(n), entries_(std::move(row_major)) {
    if (n_ == 0) {
        throw std::invalid_argument("ProximityMatrix: need at least one neuron");
    }
    if (entries_.size() != n_ * n_) {
        throw DimensionMismatch("ProximityMatrix: entry count is not n*n");
    }
    for (size_t i = 0; i < n_; i++) {
        for (size_t j = 0; j < n_; j++) {
            double d = (*this)(i, j);
            if (!std::isfinite(d)) {
                std::ostringstream ss;
                ss << "ProximityMatrix: non-finite distance at (" << (i + 1) << ", " << (j + 1) << ")";
                throw std::invalid_argument(ss.str());
            }
            if (i == j) {
                if (std::abs(d) > kSymmetryTolerance) {
                    std::ostringstream ss;
                    ss << "ProximityMatrix: nonzero diagonal at (" << (i + 1) << ", " << (i + 1) << ")";
                    throw std::invalid_argument(ss.str());
                }
                continue;
            }
            if (!(d > 0)) {
                std::ostringstream ss;
                ss << "ProximityMatrix: distance at (" << (i + 1) << ", " << (j + 1) << ") must be positive";
                throw std::invalid_argument(ss.str());
            }
            if (j > i && std::abs(d - (*this)(j, i)) > kSymmetryTolerance) {
                std::ostringstream ss;
                ss << "ProximityMatrix: asymmetric at (" << (i + 1) << ", " << (j + 1) << ")";
                throw std::invalid_argument(ss.str());
            }
        }
    }
}

ProximityMatrix ProximityMatrix::from_rows(const std::vector<std::vector<double>> &rows) {
    size_t n = rows.size();
    std::vector<double> flat;
    flat.reserve(n * n);
    for (const auto &r : rows) {
        require_same_size(n, r.size(), "ProximityMatrix (square rows)");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return ProximityMatrix(n, std::move(flat));
}

ProximityMatrix ProximityMatrix::uniform(size_t n) {
    std::vector<double> flat(n * n, 1.0);
    for (size_t i = 0; i < n; i++) {
        flat[i * n + i] = 0.0;
    }
    return ProximityMatrix(n, std::move(flat));
}

// ---------------------------------------------------------------------------
// Fragment

Fragment::Fragment(size_t n) : values_(n), clamped_(n, false) {
    if (n == 0) {
        throw std::invalid_argument("Fragment: need at least one neuron");
    }
}

Fragment Fragment::from_start(size_t n, const StartAssignment &start) {
    Fragment f(n);
    for (const auto &nv : start) {
        if (nv.neuron >= n) {
            std::ostringstream ss;
            ss << "Fragment: neuron " << (nv.neuron + 1) << " is out of range 1.." << n;
            throw std::invalid_argument(ss.str());
        }
        if (!is_spin(nv.value)) {
            throw std::invalid_argument("Fragment: start value must be +1 or -1");
        }
        if (f.values_[nv.neuron].has_value()) {
            std::ostringstream ss;
            ss << "Fragment: neuron " << (nv.neuron + 1) << " assigned twice";
            throw std::invalid_argument(ss.str());
        }
        f.values_[nv.neuron] = nv.value;
        f.clamped_[nv.neuron] = true;
    }
    return f;
}

size_t Fragment::assigned_count() const noexcept {
    return static_cast<size_t>(std::count_if(values_.begin(), values_.end(), [](const auto &v) {
        return v.has_value();
    }));
}

std::optional<size_t> Fragment::prefix_length() const noexcept {
    size_t k = 0;
    while (k < values_.size() && values_[k].has_value()) {
        k++;
    }
    for (size_t i = k; i < values_.size(); i++) {
        if (values_[i].has_value()) {
            return std::nullopt;
        }
    }
    return k;
}

Fragment Fragment::with_assigned(size_t i, Spin v, bool clamp) const {
    if (i >= values_.size()) {
        throw std::out_of_range("Fragment::with_assigned: neuron out of range");
    }
    if (values_[i].has_value()) {
        throw std::logic_error("Fragment::with_assigned: neuron already holds a value");
    }
    if (!is_spin(v)) {
        throw std::invalid_argument("Fragment::with_assigned: value must be +1 or -1");
    }
    Fragment out = *this;
    out.values_[i] = v;
    out.clamped_[i] = clamp;
    return out;
}

BipolarVector Fragment::to_vector() const {
    std::vector<Spin> out;
    out.reserve(values_.size());
    for (const auto &v : values_) {
        if (!v) {
            throw std::logic_error("Fragment::to_vector: fragment is incomplete");
        }
        out.push_back(*v);
    }
    return BipolarVector(std::move(out));
}

// ---------------------------------------------------------------------------
// Memory sets

MemorySet validate_memory_set(std::vector<BipolarVector> memories) {
    if (memories.empty()) {
        throw std::invalid_argument("memory set is empty");
    }
    MemorySet out;
    out.n = memories.front().size();
    for (size_t k = 1; k < memories.size(); k++) {
        if (memories[k].size() != out.n) {
            std::ostringstream ss;
            ss << "memory " << (k + 1) << " has " << memories[k].size() << " neurons, expected " << out.n;
            throw DimensionMismatch(ss.str());
        }
    }
    for (size_t a = 0; a < memories.size(); a++) {
        for (size_t b = a + 1; b < memories.size(); b++) {
            if (memories[a] == memories[b]) {
                out.duplicates.emplace_back(a, b);
            }
        }
    }
    out.memories = std::move(memories);
    return out;
}

MemorySet validate_memory_set(const std::vector<std::vector<int>> &memories) {
    if (memories.empty()) {
        throw std::invalid_argument("memory set is empty");
    }
    size_t n = memories.front().size();
    std::vector<BipolarVector> vecs;
    vecs.reserve(memories.size());
    for (size_t k = 0; k < memories.size(); k++) {
        if (memories[k].size() != n) {
            std::ostringstream ss;
            ss << "memory " << (k + 1) << " has " << memories[k].size() << " neurons, expected " << n;
            throw DimensionMismatch(ss.str());
        }
        vecs.push_back(BipolarVector::from_ints(memories[k]));
    }
    return validate_memory_set(std::move(vecs));
}

}  // namespace assocmem
