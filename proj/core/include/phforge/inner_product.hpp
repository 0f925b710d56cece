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

#include "phforge/complex_poly.hpp"

namespace phforge {

enum class Conjugation { None, Second };

/// Bernstein coefficients z_k of u(t) v(t) (or u(t) conj(v(t))), degree m+n.
/// Both operands must already be in the Bernstein basis.
ComplexPoly bernstein_product(const ComplexPoly& u, const ComplexPoly& v, Conjugation conj);

/// <u, v> = integral over [0,1] of u(t) conj(v(t)), in closed form: the mean
/// of the product's Bernstein coefficients. Legendre inputs are converted.
Complex inner_product(const ComplexPoly& u, const ComplexPoly& v);

/// sqrt(Re <w, w>).
double norm(const ComplexPoly& w);

/// ||u - v||.
///
/// For a rotation s = e^{i theta} r this evaluates to
/// sqrt(2 (1 - cos theta)) ||r||, which follows from expanding the norm.
double distance(const ComplexPoly& u, const ComplexPoly& v);

/// Angle in [0, pi] with cos(theta) = Re<u,v> / (||u|| ||v||). Throws
/// ErrorKind::UndefinedAngle when either operand has zero norm.
double angle(const ComplexPoly& u, const ComplexPoly& v);

/// Gauss-Legendre quadrature of the inner product with `nodes` points. Exact
/// when nodes >= ceil((deg u + deg v + 1) / 2). Test oracle only.
Complex quadrature_inner_product(const ComplexPoly& u, const ComplexPoly& v, int nodes);

/// Gauss-Legendre nodes and weights on [0,1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussRule gauss_legendre(int count);

} // namespace phforge
