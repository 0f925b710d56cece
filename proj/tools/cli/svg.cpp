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

#include "svg.hpp"

#include <algorithm>
#include <cstdio>

#include "phforge/error.hpp"
#include "phforge/modify.hpp"

namespace phforge::cli {

namespace {

constexpr const char* kPalette[8] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                     "#9467bd", "#8c564b", "#e377c2", "#17becf"};

std::string fmt(double v) {
    if (v == 0.0) v = 0.0;  // no "-0"
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// Mathematical orientation: y grows upward.
std::string point(Complex z) { return fmt(z.real()) + "," + fmt(-z.imag()); }

} // namespace

std::string render_svg(const std::vector<PHCurve>& input, const RenderOptions& options) {
    if (input.empty()) throw Error(ErrorKind::InvalidArgument, "nothing to render");
    if (options.samples < 2) throw Error(ErrorKind::InvalidArgument, "samples must be at least 2");

    std::vector<PHCurve> curves;
    for (const auto& c : input)
        curves.push_back(options.centroid_align ? centroid_aligned(c, input.front()) : c);

    std::vector<std::vector<Complex>> paths;
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    auto grow = [&](Complex z) {
        xmin = std::min(xmin, z.real());
        xmax = std::max(xmax, z.real());
        ymin = std::min(ymin, -z.imag());
        ymax = std::max(ymax, -z.imag());
    };
    for (const auto& c : curves) {
        paths.push_back(sample(c, options.samples));
        for (Complex z : paths.back()) grow(z);
        if (options.control_polygons)
            for (Complex z : c.controls) grow(z);
    }
    double w = xmax - xmin, h = ymax - ymin;
    const double extent = std::max({w, h, 1e-9});
    if (w < 1e-9 * extent) w = extent;
    if (h < 1e-9 * extent) h = extent;
    const double cx = 0.5 * (xmin + xmax), cy = 0.5 * (ymin + ymax);
    w *= 1.1;
    h *= 1.1;
    const int height = std::max(1, static_cast<int>(options.width * h / w + 0.5));

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(options.width) + "\" height=\"" + std::to_string(height) +
           "\" viewBox=\"" + fmt(cx - 0.5 * w) + " " + fmt(cy - 0.5 * h) + " " + fmt(w) + " " +
           fmt(h) + "\">\n";
    const std::string stroke = fmt(0.004 * std::max(w, h));
    for (std::size_t i = 0; i < curves.size(); ++i) {
        const char* colour = kPalette[i % 8];
        if (options.control_polygons) {
            out += "  <polyline fill=\"none\" stroke=\"" + std::string(colour) + "\" stroke-width=\"" +
                   stroke + "\" stroke-dasharray=\"" + fmt(4 * 0.004 * std::max(w, h)) +
                   "\" stroke-opacity=\"0.6\" points=\"";
            for (std::size_t k = 0; k < curves[i].controls.size(); ++k)
                out += (k ? " " : "") + point(curves[i].controls[k]);
            out += "\"/>\n";
        }
        out += "  <path fill=\"none\" stroke=\"" + std::string(colour) + "\" stroke-width=\"" + stroke +
               "\" d=\"";
        for (std::size_t k = 0; k < paths[i].size(); ++k)
            out += (k ? " L" : "M") + point(paths[i][k]);
        out += "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace phforge::cli
