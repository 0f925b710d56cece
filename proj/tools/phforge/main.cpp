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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "commands.hpp"
#include "server.hpp"

using phforge::cli::json;

namespace {

enum Exit { kOk = 0, kValidation = 2, kSolverEmpty = 3 };

json read_curve(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw phforge::cli::ValidationError("", "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return phforge::cli::parse_text(ss.str(), path);
}

// "4=0,5=0" -> {"4": 0, "5": 0}
json parse_fixed(const std::vector<std::string>& items) {
    json out = json::object();
    for (const auto& item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw phforge::cli::ValidationError("/fixed", "expected k=v, got \"" + item + "\"");
        try {
            out[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw phforge::cli::ValidationError("/fixed/" + item.substr(0, eq), "expected a number");
        }
    }
    return out;
}

int run(const std::function<void()>& body) {
    try {
        body();
        return kOk;
    } catch (const phforge::cli::ValidationError& e) {
        std::cerr << phforge::cli::error_body(e).dump(2) << "\n";
        return kValidation;
    } catch (const phforge::cli::SolverEmpty& e) {
        std::cerr << phforge::cli::error_body(e).dump(2) << "\n";
        return kSolverEmpty;
    }
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"phforge: Pythagorean-hodograph curve toolkit"};
    app.require_subcommand(1);

    std::string file, to, scheme, out_path, host = "127.0.0.1";
    std::vector<std::string> files, fixed;
    std::vector<double> sigma, start, r, phi, rho;
    std::optional<double> delta, d, phi0, rho_single;
    double delta_s = 0.0;
    int samples = 256, port = 8080, starts = 0;
    bool centroid = false, no_controls = false;

    auto* info = app.add_subcommand("info", "Norm, arc length, canonical and PH checks");
    info->add_option("curve", file, "Curve document")->required();

    auto* convert = app.add_subcommand("convert", "Re-express the pre-image in another basis");
    convert->add_option("curve", file, "Curve document")->required();
    convert->add_option("--to", to, "legendre or bernstein")->required();

    auto* basis = app.add_subcommand("ortho-basis", "Householder orthogonal basis of the pre-image");
    basis->add_option("curve", file, "Curve document")->required();

    auto* ortho = app.add_subcommand("ortho-ph", "PH curves orthogonal to r with a prescribed speed");
    ortho->add_option("curve", file, "Curve document")->required();
    ortho->add_option("--sigma", sigma, "Bernstein coefficients of the speed")->delimiter(',');
    ortho->add_option("--start", start, "Start point re,im")->delimiter(',')->expected(2);
    ortho->add_option("--starts", starts, "Multistart count");

    auto* perturb = app.add_subcommand("perturb", "Bounded pre-image perturbation");
    perturb->add_option("curve", file, "Curve document")->required();
    perturb->add_option("--scheme", scheme, "Scheme name")->required();
    perturb->add_option("--delta", delta, "Bound on the perturbation norm");
    perturb->add_option("--r", r, "Bernstein radii")->delimiter(',');
    perturb->add_option("--phi", phi, "Angles")->delimiter(',');
    perturb->add_option("--rho", rho, "Legendre magnitudes")->delimiter(',');
    perturb->add_option("--phi0", phi0, "Fixed Legendre angle");
    perturb->add_option("--d", d, "Target norm for endpoint-equal-angle");

    auto* arclen = app.add_subcommand("arclen", "Lengthen a canonical curve by delta-s");
    arclen->add_option("curve", file, "Curve document")->required();
    arclen->add_option("--delta-s", delta_s, "Arc-length increase")->required();
    arclen->add_option("--fix", fixed, "Fixed gammas k=v (1-based)")->delimiter(',');
    arclen->add_option("--starts", starts, "Multistart count");

    auto* render = app.add_subcommand("render", "SVG of one or more curves");
    render->add_option("curves", files, "Curve documents")->required();
    render->add_option("--out", out_path, "Output file (default stdout)");
    render->add_flag("--centroid-align", centroid, "Align control-point centroids to the first curve");
    render->add_flag("--no-controls", no_controls, "Omit control polygons");
    render->add_option("--samples", samples, "Samples per curve");

    auto* serve = app.add_subcommand("serve", "Stateless HTTP service");
    serve->add_option("--port", port, "Port (PHFORGE_PORT overrides)");
    serve->add_option("--host", host, "Bind address");

    CLI11_PARSE(app, argc, argv);

    auto curve_request = [&] { return json{{"curve", read_curve(file)}}; };

    if (info->parsed()) return run([&] { print(phforge::cli::run_info(curve_request())); });
    if (convert->parsed())
        return run([&] {
            json req = curve_request();
            req["to"] = to;
            print(phforge::cli::run_convert(req));
        });
    if (basis->parsed()) return run([&] { print(phforge::cli::run_ortho_basis(curve_request())); });
    if (ortho->parsed())
        return run([&] {
            json req = curve_request();
            if (!sigma.empty()) req["sigma"] = sigma;
            if (!start.empty()) req["start"] = start;
            if (starts > 0) req["starts"] = starts;
            print(phforge::cli::run_ortho_ph(req));
        });
    if (perturb->parsed())
        return run([&] {
            json req = curve_request();
            if (delta) req["delta"] = *delta;
            if (!r.empty()) req["r"] = r;
            if (!phi.empty()) req["phi"] = phi.size() == 1 ? json(phi[0]) : json(phi);
            if (!rho.empty()) req["rho"] = rho.size() == 1 ? json(rho[0]) : json(rho);
            if (phi0) req["phi0"] = *phi0;
            if (d) req["d"] = *d;
            print(phforge::cli::run_perturb(scheme, req));
        });
    if (arclen->parsed())
        return run([&] {
            json req = curve_request();
            req["delta_s"] = delta_s;
            req["fixed"] = parse_fixed(fixed);
            if (starts > 0) req["starts"] = starts;
            print(phforge::cli::run_arclen(req));
        });
    if (render->parsed())
        return run([&] {
            json req = {{"curves", json::array()}, {"samples", samples},
                        {"centroid_align", centroid}, {"controls", !no_controls}};
            for (const auto& f : files) req["curves"].push_back(read_curve(f));
            const std::string svg = phforge::cli::run_render(req);
            if (out_path.empty()) {
                std::cout << svg;
            } else {
                std::ofstream out(out_path, std::ios::binary);
                if (!out) throw phforge::cli::ValidationError("", "cannot write " + out_path);
                out << svg;
            }
        });
    if (serve->parsed()) {
        if (const char* env = std::getenv("PHFORGE_PORT")) {
            try {
                port = std::stoi(env);
            } catch (const std::exception&) {
                std::cerr << "phforge: PHFORGE_PORT is not a port number: " << env << "\n";
                return kValidation;
            }
        }
        return phforge::cli::serve(host, port) ? kOk : 1;
    }
    return kOk;
}
