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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace assocmem {

/// Thrown when two operands disagree on neuron count (or matrix shape).
///
/// Derives from std::invalid_argument so callers that only care about
/// "bad input" can catch the base class.
class DimensionMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown by text parsers. Line and column are 1-based; zero means unknown.
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string &message, size_t line, size_t column, std::string token = {});

    size_t line() const noexcept {
        return line_;
    }
    size_t column() const noexcept {
        return column_;
    }
    const std::string &token() const noexcept {
        return token_;
    }

   private:
    size_t line_;
    size_t column_;
    std::string token_;
};

/// Thrown when a file cannot be opened, read or written.
class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

}  // namespace assocmem
