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
 * Text formats read and written by the assocmem tool.
 *
 * Memory files: one memory per line, whitespace-separated tokens 1 / -1.
 * Proximity files: n lines of n decimal reals. Both accept `#` comments
 * (to end of line) and ignore blank lines.
 *
 * Weight files and reports are JSON objects with a fixed key order and
 * two-space indentation, so identical runs produce identical bytes.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "assocmem/types.h"
#include "json.hpp"

namespace assocmem::cli {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolName = "assocmem";
inline constexpr std::string_view kWeightsFormat = "assocmem-weights";
inline constexpr int kFormatVersion = 1;

std::string tool_version();

/// Throws IoError when the file is missing or unreadable.
std::string read_file(const std::filesystem::path &path);
/// Throws IoError when the file cannot be written.
void write_file(const std::filesystem::path &path, std::string_view contents);

MemorySet parse_memories_text(std::string_view text);
MemorySet parse_memories(const std::filesystem::path &path);
std::string format_memories(std::span<const BipolarVector> memories);

ProximityMatrix parse_proximity_text(std::string_view text);
ProximityMatrix parse_proximity(const std::filesystem::path &path);

/// "1,-1,1" or "1 -1 1".
BipolarVector parse_state(std::string_view text);

/// "1:+1,4:-1" with 1-based neuron indices; n bounds the indices.
StartAssignment parse_start(std::string_view text, size_t n);

/// "0.6,0.8".
std::vector<double> parse_real_list(std::string_view text);

/// "5,10,15" or "5:40:5" (inclusive range with step), or a mix of both.
std::vector<size_t> parse_count_list(std::string_view text);

Json weights_to_json(const InterconnectionMatrix &weights, const Json &provenance);
InterconnectionMatrix weights_from_json_text(std::string_view text);
InterconnectionMatrix parse_weights(const std::filesystem::path &path);

/// Serialized JSON with a trailing newline.
std::string dump(const Json &j);

/// 1-based rendering helpers for reports.
Json state_json(const BipolarVector &x);
Json neuron_list_json(std::span<const size_t> zero_based);

}  // namespace assocmem::cli
