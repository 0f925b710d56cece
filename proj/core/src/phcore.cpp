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

#include "phforge/phcore.hpp"

#include <algorithm>
#include <cmath>

#include "phforge/conversion.hpp"
#include "phforge/error.hpp"
#include "phforge/inner_product.hpp"

namespace phforge {

namespace {

std::vector<Complex> integrate(const ComplexPoly& hodograph, Complex p0) {
    const int n = hodograph.degree() + 1;
    std::vector<Complex> controls;
    controls.reserve(static_cast<std::size_t>(n) + 1);
    controls.push_back(p0);
    for (const Complex& h : hodograph.coeffs()) {
        controls.push_back(controls.back() + h / static_cast<double>(n));
    }
    return controls;
}

} // namespace

PHCurve build_curve(const ComplexPoly& w, Complex p0) {
    if (w.is_zero()) {
        throw Error(ErrorKind::DegenerateInput, "build_curve: pre-image is identically zero");
    }
    const ComplexPoly wb = convert(w, Basis::Bernstein);
    ComplexPoly h = bernstein_product(wb, wb, Conjugation::None);
    std::vector<Complex> controls = integrate(h, p0);
    return PHCurve{w, std::move(h), std::move(controls), p0};
}

Complex eval_curve(const PHCurve& c, double t) {
    return de_casteljau(c.controls, t);
}

std::vector<Complex> sample_bezier(std::span<const Complex> controls, int count) {
    if (count < 2) {
        throw Error(ErrorKind::InvalidArgument, "sample: need at least two samples");
    }
    std::vector<Complex> pts(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        pts[i] = de_casteljau(controls, static_cast<double>(i) / (count - 1));
    }
    return pts;
}

std::vector<Complex> sample(const PHCurve& c, int count) {
    return sample_bezier(c.controls, count);
}

double arc_length(const ComplexPoly& w) {
    return inner_product(w, w).real();
}

ComplexPoly parametric_speed(const ComplexPoly& w) {
    const ComplexPoly wb = convert(w, Basis::Bernstein);
    return bernstein_product(wb, wb, Conjugation::Second);
}

PhReport pythagorean_residual(std::span<const Complex> controls, const ComplexPoly& speed,
                              double tol) {
    const int n = static_cast<int>(controls.size()) - 1;
    if (n < 1) {
        throw Error(ErrorKind::InvalidArgument, "pythagorean_residual: curve has no hodograph");
    }
    std::vector<Complex> diff(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        diff[k] = static_cast<double>(n) * (controls[k + 1] - controls[k]);
    }
    const ComplexPoly h = ComplexPoly::bernstein(std::move(diff));
    // x'^2 + y'^2 = |h|^2, degree 2(n-1).
    const ComplexPoly lhs = bernstein_product(h, h, Conjugation::Second);
    const ComplexPoly s = convert(speed, Basis::Bernstein);
    const ComplexPoly rhs = bernstein_product(s, s, Conjugation::None);

    const int degree = std::max(lhs.degree(), rhs.degree());
    const ComplexPoly a = elevate(lhs, degree);
    const ComplexPoly b = elevate(rhs, degree);
    double scale = std::max({max_abs_coeff(a), max_abs_coeff(b), 1e-300});
    double worst = 0.0;
    for (int i = 0; i <= degree; ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    PhReport report;
    report.residual = worst / scale;
    report.is_ph = report.residual < tol;
    return report;
}

PhReport verify_ph(const PHCurve& c, double tol) {
    return pythagorean_residual(c.controls, parametric_speed(c.preimage), tol);
}

Complex canonical_value_legendre(const ComplexPoly& w) {
    const ComplexPoly c = convert(w, Basis::Legendre);
    Complex sum{};
    for (const Complex& ck : c.coeffs()) {
        sum += ck * ck;
    }
    return sum;
}

Complex canonical_value_bernstein(const ComplexPoly& w) {
    const ComplexPoly wb = convert(w, Basis::Bernstein);
    const Eigen::MatrixXd& g = conversion(wb.degree()).g;
    const Eigen::VectorXcd v = to_vector(wb.coeffs());
    return (v.transpose() * g.cast<Complex>() * v)(0);
}

CanonicalCheck is_canonical(const ComplexPoly& w, double tol) {
    CanonicalCheck check;
    check.value = w.basis() == Basis::Legendre ? canonical_value_legendre(w)
                                               : canonical_value_bernstein(w);
    check.residual = std::abs(check.value - 1.0);
    check.canonical = check.residual < tol;
    return check;
}

Complex principal_sqrt(Complex z) {
    Complex r = std::sqrt(z);
    if (r.real() < 0.0 || (r.real() == 0.0 && r.imag() < 0.0)) {
        r = -r;
    }
    return r;
}

PHCurve CanonicalTransform::apply(const PHCurve& c) const {
    return build_curve(preimage_factor * c.preimage, scale_rotation * (c.p0 + translation));
}

PHCurve CanonicalTransform::invert(const PHCurve& c) const {
    return build_curve((1.0 / preimage_factor) * c.preimage, c.p0 / scale_rotation - translation);
}

std::pair<PHCurve, CanonicalTransform> to_canonical(const PHCurve& c) {
    const Complex chord = c.controls.back() - c.controls.front();
    double extent = 0.0;
    for (const Complex& p : c.controls) extent = std::max(extent, std::abs(p - c.controls.front()));
    if (std::abs(chord) <= 1e-12 * extent) {
        throw Error(ErrorKind::DegenerateInput, "to_canonical: closed curve (r(1) == r(0))");
    }
    CanonicalTransform t;
    t.translation = -c.controls.front();
    t.scale_rotation = 1.0 / chord;
    t.preimage_factor = principal_sqrt(t.scale_rotation);
    return {t.apply(c), t};
}

} // namespace phforge
