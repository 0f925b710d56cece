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
#include <vector>

#include "phforge/phcore.hpp"

namespace phforge::cli {

struct RenderOptions {
    int samples = 256;
    bool control_polygons = true;
    bool centroid_align = false;  ///< align every curve to the first one
    int width = 640;
};

/// SVG 1.1 document with one <path> per curve and a dashed <polyline> per
/// control polygon. Output is byte-for-byte deterministic.
std::string render_svg(const std::vector<PHCurve>& curves, const RenderOptions& options = {});

} // namespace phforge::cli
