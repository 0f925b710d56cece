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

#include <string>
#include <string_view>

#include "document.hpp"

namespace phforge::cli {

// Every handler takes a request body and returns the response body. The CLI
// assembles the same body from its flags, so both front ends share results.
// Curve requests carry the document under "curve".

json run_info(const json& request);
json run_convert(const json& request);        // "to": "legendre" | "bernstein"
json run_ortho_basis(const json& request);
json run_ortho_ph(const json& request);       // "sigma", "start"
json run_perturb(std::string_view scheme, const json& request);
json run_arclen(const json& request);         // "delta_s", "fixed": {"4": 0, ...}
std::string run_render(const json& request);  // "curves", "samples", "centroid_align", "controls"

/// Error body shared by both front ends.
json error_body(const ValidationError& e);
json error_body(const SolverEmpty& e);

} // namespace phforge::cli
