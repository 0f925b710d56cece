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

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "phforge/complex_poly.hpp"

namespace phforge::cli {

using nlohmann::json;

/// Bad input. `path` is a JSON pointer to the offending field ("" for the
/// whole body).
class ValidationError : public std::runtime_error {
public:
    ValidationError(std::string path, const std::string& message)
        : std::runtime_error(message), path_(std::move(path)) {}
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

/// A solver ran and found nothing admissible.
class SolverEmpty : public std::runtime_error {
public:
    SolverEmpty(const std::string& message, json diagnostics)
        : std::runtime_error(message), diagnostics_(std::move(diagnostics)) {}
    const json& diagnostics() const noexcept { return diagnostics_; }

private:
    json diagnostics_;
};

struct CurveDocument {
    int version = 1;
    ComplexPoly preimage = ComplexPoly::zero(Basis::Bernstein, 0);
    Complex p0{};
    json metadata = json::object();
};

CurveDocument parse_document(const json& j, const std::string& path = "");
json to_json(const CurveDocument& doc);

json parse_text(const std::string& text, const std::string& source);

json complex_json(Complex z);
json complex_list(std::span<const Complex> zs);
json poly_json(const ComplexPoly& p);

Complex parse_complex(const json& j, const std::string& path);
double number_at(const json& obj, const char* key, const std::string& path);
std::optional<double> optional_number(const json& obj, const char* key, const std::string& path);
std::vector<double> number_list(const json& obj, const char* key, const std::string& path);

} // namespace phforge::cli
