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

#include <Eigen/Dense>

#include "phforge/complex_poly.hpp"

namespace phforge {

/// Legendre/Bernstein change-of-basis matrices for one degree.
///
/// `m` maps Legendre coefficients to Bernstein coefficients (D = M C),
/// `minv` is its inverse, and `g` = minv^T minv is the Gram matrix of the
/// Bernstein basis, so that sum_k c_k^2 = W^T G W.
struct ConversionPack {
    int degree = 0;
    Eigen::MatrixXd m;
    Eigen::MatrixXd minv;
    Eigen::MatrixXd g;
};

/// Builds the matrices from their closed-form element sums. Throws for
/// degrees outside [0, kMaxDegree].
ConversionPack build_conversion(int degree);

/// Shared immutable pack for `degree`, built once on first use.
const ConversionPack& conversion(int degree);

/// Same polynomial in the target basis.
ComplexPoly convert(const ComplexPoly& p, Basis target);

Eigen::VectorXcd to_vector(std::span<const Complex> coeffs);
std::vector<Complex> from_vector(const Eigen::VectorXcd& v);

} // namespace phforge
