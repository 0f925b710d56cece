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

#include <utility>
#include <vector>

#include "phforge/complex_poly.hpp"

namespace phforge {

/// Planar Pythagorean-hodograph curve r(t) with r'(t) = w(t)^2.
struct PHCurve {
    ComplexPoly preimage;           ///< w, any basis
    ComplexPoly hodograph;          ///< w^2 in Bernstein form, degree 2m
    std::vector<Complex> controls;  ///< Bezier points p_0 .. p_{2m+1}
    Complex p0;

    int degree() const { return static_cast<int>(controls.size()) - 1; }
    /// The curve itself as a Bernstein polynomial of degree 2m+1.
    ComplexPoly as_poly() const { return ComplexPoly::bernstein(controls); }
};

/// Integrates the hodograph w^2: p_{k+1} = p_k + h_k / (2m+1).
PHCurve build_curve(const ComplexPoly& w, Complex p0 = {});

Complex eval_curve(const PHCurve& c, double t);

/// `count` points at uniform parameter values 0, 1/(count-1), ..., 1.
std::vector<Complex> sample(const PHCurve& c, int count);
std::vector<Complex> sample_bezier(std::span<const Complex> controls, int count);

/// S = ||w||^2, the integral of the parametric speed |w(t)|^2.
double arc_length(const ComplexPoly& w);

/// Parametric speed sigma(t) = |w(t)|^2 as a real-valued Bernstein
/// polynomial of degree 2m.
ComplexPoly parametric_speed(const ComplexPoly& w);

struct PhReport {
    double residual = 0.0;  ///< max coefficient mismatch, relative to the largest coefficient
    bool is_ph = false;
};

/// Pythagorean identity x'^2 + y'^2 = sigma^2 checked coefficient-wise
/// for a Bezier curve and a prescribed speed polynomial.
PhReport pythagorean_residual(std::span<const Complex> controls, const ComplexPoly& speed,
                              double tol = 1e-10);

/// The same check with sigma = |w|^2 taken from the curve's own pre-image.
/// The hodograph is recomputed from the control points, so edited controls
/// are caught.
PhReport verify_ph(const PHCurve& c, double tol = 1e-10);

struct CanonicalCheck {
    bool canonical = false;
    double residual = 0.0;  ///< |value - 1|
    Complex value;          ///< sum c_k^2, equal to r(1) - r(0)
};

/// Canonical form means r(0) = 0 and r(1) = 1, i.e. sum c_k^2 = 1 over the
/// Legendre coefficients. Bernstein input is checked through W^T G W.
CanonicalCheck is_canonical(const ComplexPoly& w, double tol = 1e-10);

/// The two routes to sum c_k^2 separately, for cross-checking.
Complex canonical_value_legendre(const ComplexPoly& w);
Complex canonical_value_bernstein(const ComplexPoly& w);

/// Similarity r -> k (r + translation) taking r(0) to 0 and r(1) to 1. The
/// pre-image scales by the principal square root of k.
struct CanonicalTransform {
    Complex translation;
    Complex scale_rotation;
    Complex preimage_factor;

    PHCurve apply(const PHCurve& c) const;
    PHCurve invert(const PHCurve& c) const;
};

/// Principal square root: nonnegative real part, and nonnegative imaginary
/// part on the imaginary axis.
Complex principal_sqrt(Complex z);

/// Throws ErrorKind::DegenerateInput when r(1) == r(0).
std::pair<PHCurve, CanonicalTransform> to_canonical(const PHCurve& c);

} // namespace phforge
