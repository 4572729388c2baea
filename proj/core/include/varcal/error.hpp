// Copyright 2026 The varcal Authors.
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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace varcal {

/// Input data violates a schema or invariant. Maps to CLI exit code 1.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string message, std::string instance_id = {},
                  std::string field = {},
                  std::optional<std::size_t> line = std::nullopt);

  /// Message without the line/instance/field prefix.
  const std::string& detail() const noexcept { return detail_; }
  const std::string& instance_id() const noexcept { return instance_id_; }
  const std::string& field() const noexcept { return field_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  std::string detail_;
  std::string instance_id_;
  std::string field_;
  std::optional<std::size_t> line_;
};

/// A production lacks the annotation a probe needs (tokens, pos_tags or
/// embedding).
class MissingAnnotationError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Too few productions to form the requested pairs or control halves.
class InsufficientDataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive enumeration would exceed the configured node budget.
class BudgetExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace varcal
