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

#include "phforge/error.hpp"

#include <cstdio>

namespace phforge {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::BasisMismatch: return "basis-mismatch";
    case ErrorKind::UndefinedAngle: return "undefined-angle";
    case ErrorKind::DegenerateInput: return "degenerate-input";
    case ErrorKind::BoundViolation: return "bound-violation";
    case ErrorKind::UndefinedTangent: return "undefined-tangent";
    case ErrorKind::Arity: return "arity";
    case ErrorKind::NotCanonical: return "not-canonical";
    }
    return "unknown";
}

namespace {

std::string bound_message(double norm, double bound) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "perturbation norm %.17g exceeds bound %.17g by %.17g",
                  norm, bound, norm - bound);
    return buf;
}

} // namespace

BoundViolation::BoundViolation(double norm, double bound)
    : Error(ErrorKind::BoundViolation, bound_message(norm, bound)),
      norm_(norm), bound_(bound) {}

} // namespace phforge
