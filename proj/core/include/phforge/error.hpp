// Copyright 2026 The phforge Authors
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

namespace phforge {

enum class ErrorKind {
    InvalidArgument,
    BasisMismatch,
    UndefinedAngle,
    DegenerateInput,
    BoundViolation,
    UndefinedTangent,
    Arity,
    NotCanonical,
};

const char* to_string(ErrorKind kind);

/// Base class for every error raised by the core library. All of them are
/// input-validation failures; the CLI maps them to exit code 2.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Raised by `apply` when a perturbation's norm exceeds the prescribed bound.
class BoundViolation : public Error {
public:
    BoundViolation(double norm, double bound);

    double norm() const noexcept { return norm_; }
    double bound() const noexcept { return bound_; }
    double excess() const noexcept { return norm_ - bound_; }

private:
    double norm_;
    double bound_;
};

} // namespace phforge
