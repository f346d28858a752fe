// Copyright 2026 The ladder authors
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

#ifndef LADDER_ERRORS_HPP
#define LADDER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ladder {

/// Base class for all ladder errors. `code()` is a stable machine-readable
/// identifier used by the CLI error JSON.
class Error : public std::runtime_error {
  public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

  private:
    std::string code_;
};

/// A state that must be normalized is not (|norm - 1| above tolerance).
class NotNormalizedError : public Error {
  public:
    explicit NotNormalizedError(const std::string& message)
        : Error("not_normalized", message) {}
};

/// place_rotation asked to emit more amplitude than the staging slot holds.
class BudgetExceededError : public Error {
  public:
    explicit BudgetExceededError(const std::string& message)
        : Error("budget_exceeded", message) {}
};

/// Transfer epsilon outside (0, 1/3).
class EpsilonOutOfRangeError : public Error {
  public:
    explicit EpsilonOutOfRangeError(const std::string& message)
        : Error("epsilon_out_of_range", message) {}
};

/// Zero input state where a nonzero one is required.
class DegenerateInputError : public Error {
  public:
    explicit DegenerateInputError(const std::string& message)
        : Error("degenerate_input", message) {}
};

/// Matrix fails the unitarity invariant.
class NotUnitaryError : public Error {
  public:
    explicit NotUnitaryError(const std::string& message)
        : Error("not_unitary", message) {}
};

/// Malformed or invalid input file.
class ParseError : public Error {
  public:
    explicit ParseError(const std::string& message)
        : Error("parse_error", message) {}
};

} // namespace ladder

#endif
