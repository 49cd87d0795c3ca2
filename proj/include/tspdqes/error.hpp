// Copyright 2026 The tspdqes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <stdexcept>
#include <string>

namespace tspdqes {

/// Malformed input text. Carries the 1-based line (0 when unknown) and the
/// offending field name so callers can point the user at the problem.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string &message, int line, std::string field)
        : std::runtime_error(format(message, line, field)), line_(line),
          field_(std::move(field)) {}

    [[nodiscard]] int line() const noexcept { return line_; }
    [[nodiscard]] const std::string &field() const noexcept { return field_; }

  private:
    static std::string format(const std::string &message, int line,
                              const std::string &field) {
        std::string out;
        if (line > 0) {
            out += "line " + std::to_string(line) + ": ";
        }
        if (!field.empty()) {
            out += "field '" + field + "': ";
        }
        return out + message;
    }

    int line_;
    std::string field_;
};

/// Well-formed input that violates a domain invariant.
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A request that exceeds a configured enumeration or memory cap.
class SizeCapError : public std::length_error {
  public:
    using std::length_error::length_error;
};

} // namespace tspdqes
