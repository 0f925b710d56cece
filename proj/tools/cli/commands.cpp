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

#include "commands.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "phforge/arcmod.hpp"
#include "phforge/conversion.hpp"
#include "phforge/error.hpp"
#include "phforge/inner_product.hpp"
#include "phforge/modify.hpp"
#include "phforge/orthokit.hpp"
#include "phforge/phcore.hpp"
#include "svg.hpp"

namespace phforge::cli {

namespace {

CurveDocument curve_of(const json& request) {
    if (!request.is_object()) throw ValidationError("", "expected a JSON object");
    if (!request.contains("curve")) throw ValidationError("/curve", "missing required field");
    return parse_document(request["curve"], "/curve");
}

bool bool_at(const json& obj, const char* key, bool fallback) {
    if (!obj.contains(key) || obj[key].is_null()) return fallback;
    if (!obj[key].is_boolean()) throw ValidationError(std::string("/") + key, "expected true or false");
    return obj[key].get<bool>();
}

int int_at(const json& obj, const char* key, int fallback, int lo, int hi) {
    if (!obj.contains(key) || obj[key].is_null()) return fallback;
    const json& v = obj[key];
    if (!v.is_number_integer() || v.get<long long>() < lo || v.get<long long>() > hi)
        throw ValidationError(std::string("/") + key,
                              "expected an integer in [" + std::to_string(lo) + ", " +
                                  std::to_string(hi) + "]");
    return v.get<int>();
}

json real_list(const Eigen::VectorXd& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
    return out;
}

json diagnostics_of(const solve::SolutionSet& raw) {
    return {{"starts", raw.starts_used},
            {"converged_fraction", raw.converged_fraction},
            {"distinct", raw.size()},
            {"message", raw.diagnostics}};
}

// Core errors are input problems as far as the front ends are concerned.
template <typename F>
auto guarded(F&& body) -> decltype(body()) {
    try {
        return body();
    } catch (const phforge::BoundViolation& e) {
        throw ValidationError("/delta", std::string(e.what()));
    } catch (const phforge::Error& e) {
        throw ValidationError("", std::string(to_string(e.kind())) + ": " + e.what());
    }
}

json solution_json(const ComplexPoly& w, const Perturbation& p, Complex p0,
                   std::optional<double> delta) {
    Applied a = apply(w, p, std::numeric_limits<double>::infinity(), p0);
    PHCurve base = build_curve(w, p0);
    json s = {{"norm", p.norm},
              {"direction_flip", p.direction_flip},
              {"delta_legendre", poly_json(p.delta_legendre)},
              {"delta_bernstein", poly_json(p.delta_bernstein)},
              {"preimage", poly_json(a.preimage)},
              {"controls", complex_list(a.curve.controls)},
              {"control_displacements", complex_list(a.control_displacements)},
              {"preimage_distance", a.preimage_distance},
              {"curve_distance", a.curve_distance},
              {"curve_distance_centroid", curve_distance(base, a.curve, true)},
              {"arc_length", arc_length(a.preimage)},
              {"end_point", complex_json(a.curve.controls.back())}};
    if (delta) s["within_bound"] = p.norm <= *delta;
    return s;
}

} // namespace

json error_body(const ValidationError& e) {
    return {{"error", "validation"}, {"path", e.path()}, {"message", e.what()}};
}

json error_body(const SolverEmpty& e) {
    return {{"error", "solver-empty"}, {"message", e.what()}, {"diagnostics", e.diagnostics()}};
}

json run_info(const json& request) {
    const CurveDocument doc = curve_of(request);
    return guarded([&] {
        const ComplexPoly& w = doc.preimage;
        PHCurve c = build_curve(w, doc.p0);
        CanonicalCheck canon = is_canonical(w);
        PhReport ph = verify_ph(c);
        return json{{"basis", to_string(w.basis())},
                    {"degree", w.degree()},
                    {"norm", norm(w)},
                    {"arc_length", arc_length(w)},
                    {"canonical",
                     {{"canonical", canon.canonical},
                      {"residual", canon.residual},
                      {"value", complex_json(canon.value)}}},
                    {"ph", {{"is_ph", ph.is_ph}, {"residual", ph.residual}}},
                    {"legendre", poly_json(convert(w, Basis::Legendre))},
                    {"bernstein", poly_json(convert(w, Basis::Bernstein))},
                    {"controls", complex_list(c.controls)}};
    });
}

json run_convert(const json& request) {
    CurveDocument doc = curve_of(request);
    if (!request.contains("to") || !request["to"].is_string())
        throw ValidationError("/to", "expected \"bernstein\" or \"legendre\"");
    const auto to = request["to"].get<std::string>();
    if (to != "bernstein" && to != "legendre")
        throw ValidationError("/to", "unknown basis \"" + to + "\"");
    doc.preimage = convert(doc.preimage, to == "bernstein" ? Basis::Bernstein : Basis::Legendre);
    return to_json(doc);
}

json run_ortho_basis(const json& request) {
    const CurveDocument doc = curve_of(request);
    return guarded([&] {
        OrthoBasis b = orthogonal_basis(doc.preimage);
        json q = json::array(), cq = json::array(), curves = json::array();
        for (Eigen::Index i = 0; i < b.q.rows(); ++i) q.push_back(real_list(b.q.row(i).transpose()));
        for (Eigen::Index i = 0; i < b.complex_q.rows(); ++i) {
            json row = json::array();
            for (Eigen::Index j = 0; j < b.complex_q.cols(); ++j)
                row.push_back(complex_json(b.complex_q(i, j)));
            cq.push_back(std::move(row));
        }
        for (const auto& c : b.curves) curves.push_back(poly_json(c));
        return json{{"dimension", b.dimension()},
                    {"g", real_list(b.g)},
                    {"q", std::move(q)},
                    {"complex_q", std::move(cq)},
                    {"curves", std::move(curves)}};
    });
}

json run_ortho_ph(const json& request) {
    const CurveDocument doc = curve_of(request);
    std::vector<double> sigma = number_list(request, "sigma", "");
    if (sigma.empty() && doc.metadata.contains("sigma"))
        sigma = number_list(doc.metadata, "sigma", "/curve/metadata");
    Complex start{};
    if (request.contains("start")) start = parse_complex(request["start"], "/start");
    OrthoPhOptions options;
    options.starts = int_at(request, "starts", options.starts, 1, 1 << 16);

    return guarded([&] {
        PHCurve c = build_curve(doc.preimage, doc.p0);
        ComplexPoly speed = parametric_speed(doc.preimage);
        if (!sigma.empty()) {
            std::vector<Complex> s(sigma.begin(), sigma.end());
            speed = ComplexPoly::bernstein(std::move(s));
        }
        OrthoPhResult r = orthogonal_ph_with_speed(c, speed, start, options);
        json sols = json::array();
        for (const auto& s : r.solutions) {
            json j = {{"kind", to_string(s.kind)},
                      {"xi", real_list(s.xi)},
                      {"controls", complex_list(s.controls)},
                      {"hodograph", poly_json(s.hodograph)},
                      {"residual", s.residual},
                      {"arc_length", s.arc_length},
                      {"inner_product", inner_product(c.as_poly(), ComplexPoly::bernstein(s.controls)).real()}};
            if (s.preimage) j["preimage"] = poly_json(*s.preimage);
            sols.push_back(std::move(j));
        }
        if (sols.empty()) throw SolverEmpty("no orthogonal PH curve found", diagnostics_of(r.raw));
        json sigma_json = json::array();
        for (Complex z : speed.coeffs()) sigma_json.push_back(z.real());
        return json{{"curve_controls", complex_list(c.controls)},
                    {"sigma", std::move(sigma_json)},
                    {"count", sols.size()},
                    {"solutions", std::move(sols)},
                    {"diagnostics", diagnostics_of(r.raw)}};
    });
}

json run_perturb(std::string_view scheme_name, const json& request) {
    const auto scheme = parse_scheme(scheme_name);
    if (!scheme || *scheme == PerturbScheme::Orthogonal)
        throw ValidationError("/scheme", "unknown perturbation scheme \"" + std::string(scheme_name) + "\"");
    const CurveDocument doc = curve_of(request);
    const ComplexPoly& w = doc.preimage;
    const int m = w.degree();
    const auto delta = optional_number(request, "delta", "");
    if (delta && !(*delta > 0.0)) throw ValidationError("/delta", "must be positive");

    return guarded([&] {
        std::vector<Perturbation> perts;
        std::vector<json> extras;
        json diagnostics = json::object();
        auto need = [&](std::vector<double> v, const char* key) {
            if (v.empty())
                throw ValidationError(std::string("/") + key, "required (or give \"delta\")");
            return v;
        };

        switch (*scheme) {
        case PerturbScheme::EqualMagnitudeLegendre: {
            auto rho = number_list(request, "rho", "");
            if (rho.empty() && delta) rho = {equal_magnitude_budget(m, *delta)};
            auto phi = number_list(request, "phi", "");
            if (phi.empty()) phi = {0.0};
            perts.push_back(equal_magnitude_legendre(m, need(rho, "rho"), phi));
            extras.push_back({{"rho", rho}});
            break;
        }
        case PerturbScheme::EqualMagnitudeBernstein: {
            auto r = number_list(request, "r", "");
            auto phi = number_list(request, "phi", "");
            if (phi.empty()) phi = {0.0};
            if (r.empty() && delta) {
                const double one = 1.0;
                r = {*delta / equal_magnitude_bernstein(m, {&one, 1}, phi).norm};
            }
            perts.push_back(equal_magnitude_bernstein(m, need(r, "r"), phi));
            extras.push_back({{"r", r}});
            break;
        }
        case PerturbScheme::TangentPreservingBernstein: {
            auto phi = number_list(request, "phi", "");
            auto r = number_list(request, "r", "");
            if (r.empty() && delta) r = {tangent_preserving_radius_for_norm(w, phi, *delta)};
            perts.push_back(tangent_preserving_bernstein(w, need(r, "r"), phi));
            extras.push_back({{"r", r}});
            break;
        }
        case PerturbScheme::TangentPreservingLegendre: {
            auto rho = optional_number(request, "rho", "");
            if (!rho && delta) rho = *delta / std::sqrt(static_cast<double>(m + 1));
            if (!rho) throw ValidationError("/rho", "required (or give \"delta\")");
            const double phi0 = optional_number(request, "phi0", "").value_or(0.0);
            auto res = tangent_preserving_legendre(w, *rho, phi0);
            for (const auto& s : res.solutions) {
                perts.push_back(s.perturbation);
                extras.push_back({{"phi0", phi0}, {"phi1", s.phi1}, {"phi2", s.phi2}, {"residual", s.residual}});
            }
            diagnostics = diagnostics_of(res.raw);
            break;
        }
        case PerturbScheme::EndpointEqualAngle: {
            auto d = optional_number(request, "d", "");
            if (!d) d = delta;
            if (!d) throw ValidationError("/d", "required (or give \"delta\")");
            const double phi = optional_number(request, "phi", "").value_or(0.0);
            auto res = endpoint_preserving_equal_angle(w, *d, phi);
            for (const auto& s : res.solutions) {
                perts.push_back(s.perturbation);
                extras.push_back({{"rho", s.rho}, {"phi", phi}});
            }
            diagnostics = {{"slope1", res.slope1}, {"offset1", res.offset1},
                           {"slope2", res.slope2}, {"offset2", res.offset2},
                           {"quadratic", {res.quad_a, res.quad_b, res.quad_c}},
                           {"discriminant", res.discriminant}};
            break;
        }
        case PerturbScheme::EndpointsAndTangentsQuintic: {
            auto rs = number_list(request, "r", "");
            if (rs.empty() && delta) {
                rs = find_r_for_norm(w, *delta);
                diagnostics["r_for_delta"] = rs;
            }
            if (rs.empty() && !delta) throw ValidationError("/r", "required (or give \"delta\")");
            for (double r : rs) {
                auto res = endpoints_and_tangents_quintic(w, r);
                // With a target norm only the branch that reaches it is wanted.
                const std::size_t count = (delta && !request.contains("r")) ? 1 : res.solutions.size();
                for (std::size_t i = 0; i < count; ++i) {
                    perts.push_back(res.solutions[i]);
                    extras.push_back({{"r", r}, {"delta_w1", complex_json(res.solutions[i].delta_bernstein[1])}});
                }
            }
            break;
        }
        case PerturbScheme::Orthogonal:
            break;
        }

        json sols = json::array();
        bool any_within = !delta;
        double smallest = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < perts.size(); ++i) {
            json s = solution_json(w, perts[i], doc.p0, delta);
            s.update(extras[i]);
            any_within = any_within || perts[i].norm <= *delta;
            smallest = std::min(smallest, perts[i].norm);
            sols.push_back(std::move(s));
        }
        if (sols.empty()) throw SolverEmpty("no admissible perturbation", diagnostics);
        if (!any_within) throw phforge::BoundViolation(smallest, *delta);
        return json{{"scheme", to_string(*scheme)},
                    {"count", sols.size()},
                    {"solutions", std::move(sols)},
                    {"diagnostics", std::move(diagnostics)}};
    });
}

json run_arclen(const json& request) {
    const CurveDocument doc = curve_of(request);
    const double delta_s = number_at(request, "delta_s", "");
    std::map<int, double> fixed;
    if (request.contains("fixed")) {
        const json& f = request["fixed"];
        if (!f.is_object()) throw ValidationError("/fixed", "expected an object of index: value");
        for (const auto& [key, value] : f.items()) {
            int k = 0;
            try {
                std::size_t used = 0;
                k = std::stoi(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw ValidationError("/fixed/" + key, "gamma index must be an integer");
            }
            if (!value.is_number()) throw ValidationError("/fixed/" + key, "expected a number");
            fixed[k] = value.get<double>();
        }
    }
    ArcOptions options;
    options.starts = int_at(request, "starts", options.starts, 1, 1 << 16);

    return guarded([&] {
        ArcSystem sys = build_system(doc.preimage, delta_s, fixed);
        ArcResult res = solve_arc_system(sys, options);
        json sols = json::array();
        for (const auto& s : res.solutions) {
            sols.push_back({{"gamma", real_list(s.gamma)},
                            {"residual", s.residual},
                            {"expanded_residual", std::abs(arc_residual_expanded(sys, s.gamma))},
                            {"norm", s.perturbation.norm},
                            {"delta_legendre", poly_json(s.perturbation.delta_legendre)},
                            {"arc_length", s.arc_length},
                            {"end_point", complex_json(s.end_point)}});
        }
        if (sols.empty()) throw SolverEmpty("no real solution of the arc-length system", diagnostics_of(res.raw));
        json fixed_json = json::object();
        for (const auto& [k, v] : sys.fixed) fixed_json[std::to_string(k)] = v;
        return json{{"arc_length", sys.s},
                    {"delta_s", sys.delta_s},
                    {"fixed", std::move(fixed_json)},
                    {"free", sys.free},
                    {"count", sols.size()},
                    {"solutions", std::move(sols)},
                    {"diagnostics", diagnostics_of(res.raw)}};
    });
}

std::string run_render(const json& request) {
    if (!request.is_object()) throw ValidationError("", "expected a JSON object");
    if (!request.contains("curves") || !request["curves"].is_array() || request["curves"].empty())
        throw ValidationError("/curves", "expected a non-empty list of curve documents");
    std::vector<PHCurve> curves;
    const json& list = request["curves"];
    RenderOptions options;
    options.samples = int_at(request, "samples", options.samples, 2, 1 << 20);
    options.centroid_align = bool_at(request, "centroid_align", false);
    options.control_polygons = bool_at(request, "controls", true);
    for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string path = "/curves/" + std::to_string(i);
        CurveDocument doc = parse_document(list[i], path);
        try {
            curves.push_back(build_curve(doc.preimage, doc.p0));
        } catch (const phforge::Error& e) {
            throw ValidationError(path + "/preimage", e.what());
        }
    }
    return guarded([&] { return render_svg(curves, options); });
}

} // namespace phforge::cli
