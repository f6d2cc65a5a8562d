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

#include "assocmem/cli/formats.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#ifndef ASSOCMEM_VERSION
#define ASSOCMEM_VERSION "0.0.0"
#endif

namespace assocmem::cli {

std::string tool_version() {
    return ASSOCMEM_VERSION;
}

std::string read_file(const std::filesystem::path &path) {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(path, ec)) {
        throw IoError("file not found: " + path.string());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open file: " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path &path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write file: " + path.string());
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) {
        throw IoError("error while writing file: " + path.string());
    }
}

namespace {

struct Token {
    std::string_view text;
    size_t column;  // 1-based
};

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v';
}

/// Splits a line into whitespace-separated tokens, dropping everything after '#'.
std::vector<Token> tokenize_line(std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
    }
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) {
            i++;
        }
        size_t start = i;
        while (i < line.size() && !is_space(line[i])) {
            i++;
        }
        if (i > start) {
            out.push_back(Token{line.substr(start, i - start), start + 1});
        }
    }
    return out;
}

/// Calls fn(line_number, tokens) for every non-empty line.
template <typename Fn>
void for_each_token_line(std::string_view text, Fn &&fn) {
    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        line_no++;
        auto tokens = tokenize_line(text.substr(pos, end - pos));
        if (!tokens.empty()) {
            fn(line_no, tokens);
        }
        pos = end + 1;
    }
}

std::string located(std::string_view what, size_t line, size_t column) {
    std::ostringstream ss;
    ss << "line " << line << ", column " << column << ": " << what;
    return ss.str();
}

bool parse_double(std::string_view s, double &out) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

bool parse_size(std::string_view s, size_t &out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size() && !s.empty();
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    size_t pos = 0;
    while (true) {
        size_t end = text.find(sep, pos);
        out.push_back(text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos));
        if (end == std::string_view::npos) {
            break;
        }
        pos = end + 1;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (is_space(s.front()) || s.front() == '\n')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (is_space(s.back()) || s.back() == '\n')) {
        s.remove_suffix(1);
    }
    return s;
}

std::optional<Spin> spin_token(std::string_view t) {
    if (t == "1" || t == "+1") {
        return Spin{1};
    }
    if (t == "-1") {
        return Spin{-1};
    }
    return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------
// Memories

MemorySet parse_memories_text(std::string_view text) {
    std::vector<BipolarVector> memories;
    for_each_token_line(text, [&](size_t line, const std::vector<Token> &tokens) {
        std::vector<Spin> values;
        values.reserve(tokens.size());
        for (const auto &tok : tokens) {
            auto s = spin_token(tok.text);
            if (!s) {
                throw ParseError(located("expected 1 or -1, found token \"" + std::string(tok.text) + "\"", line, tok.column),
                                 line, tok.column, std::string(tok.text));
            }
            values.push_back(*s);
        }
        if (!memories.empty() && values.size() != memories.front().size()) {
            std::ostringstream ss;
            ss << "line " << line << ": memory has " << values.size() << " entries, expected "
               << memories.front().size();
            throw DimensionMismatch(ss.str());
        }
        memories.emplace_back(std::move(values));
    });
    if (memories.empty()) {
        throw ParseError("memory file contains no memories", 0, 0);
    }
    return validate_memory_set(std::move(memories));
}

MemorySet parse_memories(const std::filesystem::path &path) {
    std::string text = read_file(path);
    try {
        return parse_memories_text(text);
    } catch (const ParseError &e) {
        throw ParseError(path.string() + ": " + e.what(), e.line(), e.column(), e.token());
    }
}

std::string format_memories(std::span<const BipolarVector> memories) {
    std::string out;
    for (const auto &x : memories) {
        for (size_t i = 0; i < x.size(); i++) {
            if (i) {
                out += ' ';
            }
            out += x[i] > 0 ? "1" : "-1";
        }
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// Proximity

ProximityMatrix parse_proximity_text(std::string_view text) {
    std::vector<std::vector<double>> rows;
    for_each_token_line(text, [&](size_t line, const std::vector<Token> &tokens) {
        std::vector<double> row;
        row.reserve(tokens.size());
        for (const auto &tok : tokens) {
            double v;
            if (!parse_double(tok.text, v)) {
                throw ParseError(located("expected a decimal number, found \"" + std::string(tok.text) + "\"", line, tok.column),
                                 line, tok.column, std::string(tok.text));
            }
            row.push_back(v);
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            std::ostringstream ss;
            ss << "line " << line << ": row has " << row.size() << " entries, expected " << rows.front().size();
            throw DimensionMismatch(ss.str());
        }
        rows.push_back(std::move(row));
    });
    if (rows.empty()) {
        throw ParseError("proximity file contains no rows", 0, 0);
    }
    if (rows.size() != rows.front().size()) {
        std::ostringstream ss;
        ss << "proximity matrix is not square: " << rows.size() << " rows of " << rows.front().size() << " entries";
        throw DimensionMismatch(ss.str());
    }
    return ProximityMatrix::from_rows(rows);
}

ProximityMatrix parse_proximity(const std::filesystem::path &path) {
    std::string text = read_file(path);
    try {
        return parse_proximity_text(text);
    } catch (const ParseError &e) {
        throw ParseError(path.string() + ": " + e.what(), e.line(), e.column(), e.token());
    }
}

// ---------------------------------------------------------------------------
// Command-line values

BipolarVector parse_state(std::string_view text) {
    std::string normalized(text);
    for (char &c : normalized) {
        if (c == ',') {
            c = ' ';
        }
    }
    auto tokens = tokenize_line(normalized);
    std::vector<Spin> values;
    for (const auto &tok : tokens) {
        auto s = spin_token(tok.text);
        if (!s) {
            throw ParseError(located("state: expected 1 or -1, found \"" + std::string(tok.text) + "\"", 1, tok.column), 1,
                             tok.column, std::string(tok.text));
        }
        values.push_back(*s);
    }
    if (values.empty()) {
        throw ParseError("state: no values given", 1, 1);
    }
    return BipolarVector(std::move(values));
}

StartAssignment parse_start(std::string_view text, size_t n) {
    StartAssignment out;
    size_t column = 1;
    for (auto item : split(text, ',')) {
        std::string_view entry = trim(item);
        auto colon = entry.find(':');
        size_t index = 0;
        std::optional<Spin> value;
        if (colon != std::string_view::npos && parse_size(trim(entry.substr(0, colon)), index)) {
            value = spin_token(trim(entry.substr(colon + 1)));
        }
        if (!value) {
            throw ParseError(located("start: expected index:value such as 1:+1, found \"" + std::string(entry) + "\"", 1, column),
                             1, column, std::string(entry));
        }
        if (index == 0 || index > n) {
            std::ostringstream ss;
            ss << "start: neuron " << index << " is out of range 1.." << n;
            throw std::invalid_argument(ss.str());
        }
        for (const auto &prev : out) {
            if (prev.neuron == index - 1) {
                std::ostringstream ss;
                ss << "start: neuron " << index << " assigned twice";
                throw std::invalid_argument(ss.str());
            }
        }
        out.push_back(NeuronValue{index - 1, *value});
        column += item.size() + 1;
    }
    return out;
}

std::vector<double> parse_real_list(std::string_view text) {
    std::vector<double> out;
    size_t column = 1;
    for (auto item : split(text, ',')) {
        double v;
        if (!parse_double(trim(item), v)) {
            throw ParseError(located("expected a decimal number, found \"" + std::string(trim(item)) + "\"", 1, column), 1,
                             column, std::string(trim(item)));
        }
        out.push_back(v);
        column += item.size() + 1;
    }
    return out;
}

std::vector<size_t> parse_count_list(std::string_view text) {
    std::vector<size_t> out;
    size_t column = 1;
    for (auto item : split(text, ',')) {
        std::string_view entry = trim(item);
        auto parts = split(entry, ':');
        std::vector<size_t> nums;
        bool ok = parts.size() == 1 || parts.size() == 3;
        for (auto p : parts) {
            size_t v;
            ok = ok && parse_size(trim(p), v);
            if (ok) {
                nums.push_back(v);
            }
        }
        if (!ok) {
            throw ParseError(located("expected a count or lo:hi:step range, found \"" + std::string(entry) + "\"", 1, column),
                             1, column, std::string(entry));
        }
        if (nums.size() == 1) {
            out.push_back(nums[0]);
        } else {
            if (nums[2] == 0 || nums[0] > nums[1]) {
                throw std::invalid_argument("range " + std::string(entry) + " needs lo <= hi and a positive step");
            }
            for (size_t v = nums[0]; v <= nums[1]; v += nums[2]) {
                out.push_back(v);
            }
        }
        column += item.size() + 1;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Weights

Json weights_to_json(const InterconnectionMatrix &weights, const Json &provenance) {
    Json j;
    j["format"] = kWeightsFormat;
    j["format_version"] = kFormatVersion;
    j["tool"] = {{"name", kToolName}, {"version", tool_version()}};
    j["provenance"] = provenance;
    j["n"] = weights.size();
    j["matrix"] = weights.rows();
    return j;
}

namespace {

std::pair<size_t, size_t> line_and_column(std::string_view text, size_t byte) {
    size_t line = 1;
    size_t column = 1;
    for (size_t i = 0; i < byte && i < text.size(); i++) {
        if (text[i] == '\n') {
            line++;
            column = 1;
        } else {
            column++;
        }
    }
    return {line, column};
}

}  // namespace

InterconnectionMatrix weights_from_json_text(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error &e) {
        auto [line, column] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError(located("weight file is not valid JSON", line, column), line, column);
    }
    if (!j.is_object() || j.value("format", "") != kWeightsFormat) {
        throw ParseError("weight file: missing \"format\": \"assocmem-weights\"", 1, 1);
    }
    if (!j.contains("matrix") || !j["matrix"].is_array()) {
        throw ParseError("weight file: missing \"matrix\" array", 1, 1);
    }
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto &row : j["matrix"]) {
        if (!row.is_array()) {
            throw ParseError("weight file: matrix rows must be arrays", 1, 1);
        }
        std::vector<std::int64_t> r;
        for (const auto &e : row) {
            if (!e.is_number_integer()) {
                throw ParseError("weight file: matrix entries must be integers", 1, 1);
            }
            r.push_back(e.get<std::int64_t>());
        }
        rows.push_back(std::move(r));
    }
    if (rows.empty()) {
        throw ParseError("weight file: matrix is empty", 1, 1);
    }
    if (j.contains("n") && j["n"].is_number_unsigned() && j["n"].get<size_t>() != rows.size()) {
        throw DimensionMismatch("weight file: \"n\" disagrees with the matrix size");
    }
    return InterconnectionMatrix::from_rows(rows);
}

InterconnectionMatrix parse_weights(const std::filesystem::path &path) {
    std::string text = read_file(path);
    try {
        return weights_from_json_text(text);
    } catch (const ParseError &e) {
        throw ParseError(path.string() + ": " + e.what(), e.line(), e.column(), e.token());
    }
}

namespace {

bool is_flat_array(const Json &j) {
    if (!j.is_array()) {
        return false;
    }
    for (const auto &e : j) {
        if (e.is_structured()) {
            return false;
        }
    }
    return true;
}

// Like dump(2), but arrays of scalars stay on one line.
void dump_into(const Json &j, std::string &out, size_t depth) {
    const std::string pad(2 * (depth + 1), ' ');
    const std::string close_pad(2 * depth, ' ');
    if (j.is_object() && !j.empty()) {
        out += "{\n";
        size_t i = 0;
        for (const auto &[key, value] : j.items()) {
            out += pad + Json(key).dump() + ": ";
            dump_into(value, out, depth + 1);
            out += ++i < j.size() ? ",\n" : "\n";
        }
        out += close_pad + "}";
    } else if (j.is_array() && !j.empty() && !is_flat_array(j)) {
        out += "[\n";
        for (size_t i = 0; i < j.size(); i++) {
            out += pad;
            dump_into(j[i], out, depth + 1);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += close_pad + "]";
    } else if (j.is_array()) {
        out += "[";
        for (size_t i = 0; i < j.size(); i++) {
            out += (i ? ", " : "") + j[i].dump();
        }
        out += "]";
    } else {
        out += j.dump();
    }
}

}  // namespace

std::string dump(const Json &j) {
    std::string out;
    dump_into(j, out, 0);
    out += '\n';
    return out;
}

Json state_json(const BipolarVector &x) {
    Json arr = Json::array();
    for (Spin s : x.values()) {
        arr.push_back(int{s});
    }
    return arr;
}

Json neuron_list_json(std::span<const size_t> zero_based) {
    Json arr = Json::array();
    for (size_t i : zero_based) {
        arr.push_back(i + 1);
    }
    return arr;
}

}  // namespace assocmem::cli
