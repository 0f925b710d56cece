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

#include "document.hpp"

#include <cmath>

#include "phforge/error.hpp"

namespace phforge::cli {

namespace {

std::string join(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string join(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

double as_number(const json& j, const std::string& path) {
    if (!j.is_number()) throw ValidationError(path, "expected a number");
    double v = j.get<double>();
    if (!std::isfinite(v)) throw ValidationError(path, "expected a finite number");
    return v;
}

Basis parse_basis(const json& j, const std::string& path) {
    if (!j.is_string()) throw ValidationError(path, "expected \"bernstein\" or \"legendre\"");
    const auto s = j.get<std::string>();
    if (s == "bernstein") return Basis::Bernstein;
    if (s == "legendre") return Basis::Legendre;
    throw ValidationError(path, "unknown basis \"" + s + "\"");
}

} // namespace

json parse_text(const std::string& text, const std::string& source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError("", source + ": malformed JSON: " + e.what());
    }
}

Complex parse_complex(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2) throw ValidationError(path, "expected [re, im]");
    return {as_number(j[0], join(path, 0)), as_number(j[1], join(path, 1))};
}

double number_at(const json& obj, const char* key, const std::string& path) {
    if (!obj.is_object() || !obj.contains(key))
        throw ValidationError(join(path, key), "missing required field");
    return as_number(obj[key], join(path, key));
}

std::optional<double> optional_number(const json& obj, const char* key, const std::string& path) {
    if (!obj.is_object() || !obj.contains(key) || obj[key].is_null()) return std::nullopt;
    return as_number(obj[key], join(path, key));
}

std::vector<double> number_list(const json& obj, const char* key, const std::string& path) {
    std::vector<double> out;
    if (!obj.is_object() || !obj.contains(key) || obj[key].is_null()) return out;
    const json& v = obj[key];
    const std::string p = join(path, key);
    if (v.is_number()) return {as_number(v, p)};
    if (!v.is_array()) throw ValidationError(p, "expected a number or a list of numbers");
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_number(v[i], join(p, i)));
    return out;
}

CurveDocument parse_document(const json& j, const std::string& path) {
    if (!j.is_object()) throw ValidationError(path, "expected a curve document object");
    CurveDocument doc;
    if (!j.contains("version")) throw ValidationError(join(path, "version"), "missing required field");
    if (!j["version"].is_number_integer() || j["version"].get<int>() != 1)
        throw ValidationError(join(path, "version"), "unsupported version (expected 1)");

    const std::string pp = join(path, "preimage");
    if (!j.contains("preimage")) throw ValidationError(pp, "missing required field");
    const json& pre = j["preimage"];
    if (!pre.is_object()) throw ValidationError(pp, "expected an object");
    if (!pre.contains("basis")) throw ValidationError(join(pp, "basis"), "missing required field");
    const Basis basis = parse_basis(pre["basis"], join(pp, "basis"));
    if (!pre.contains("coeffs") || !pre["coeffs"].is_array())
        throw ValidationError(join(pp, "coeffs"), "expected a list of [re, im] pairs");
    const json& cs = pre["coeffs"];
    if (cs.empty()) throw ValidationError(join(pp, "coeffs"), "at least one coefficient required");
    if (static_cast<int>(cs.size()) - 1 > kMaxDegree)
        throw ValidationError(join(pp, "coeffs"), "degree exceeds " + std::to_string(kMaxDegree));
    std::vector<Complex> coeffs;
    for (std::size_t i = 0; i < cs.size(); ++i)
        coeffs.push_back(parse_complex(cs[i], join(join(pp, "coeffs"), i)));
    if (pre.contains("degree")) {
        if (!pre["degree"].is_number_integer())
            throw ValidationError(join(pp, "degree"), "expected an integer");
        if (pre["degree"].get<long long>() != static_cast<long long>(cs.size()) - 1)
            throw ValidationError(join(pp, "degree"), "degree does not match the coefficient count");
    }
    doc.preimage = ComplexPoly(basis, std::move(coeffs));

    if (j.contains("p0")) doc.p0 = parse_complex(j["p0"], join(path, "p0"));
    if (j.contains("metadata")) {
        if (!j["metadata"].is_object())
            throw ValidationError(join(path, "metadata"), "expected an object");
        doc.metadata = j["metadata"];
    }
    return doc;
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json complex_list(std::span<const Complex> zs) {
    json out = json::array();
    for (Complex z : zs) out.push_back(complex_json(z));
    return out;
}

json poly_json(const ComplexPoly& p) {
    return {{"basis", p.basis() == Basis::Bernstein ? "bernstein" : "legendre"},
            {"degree", p.degree()},
            {"coeffs", complex_list(p.coeffs())}};
}

json to_json(const CurveDocument& doc) {
    return {{"version", doc.version},
            {"preimage", poly_json(doc.preimage)},
            {"p0", complex_json(doc.p0)},
            {"metadata", doc.metadata}};
}

} // namespace phforge::cli
