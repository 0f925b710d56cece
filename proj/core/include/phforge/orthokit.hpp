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

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "phforge/complex_poly.hpp"
#include "phforge/phcore.hpp"
#include "phforge/solvekit.hpp"

namespace phforge {

/// Below this Euclidean length a coefficient vector has no usable
/// orthogonal complement.
inline constexpr double kDegenerateNorm = 1e-14;

/// Interleaved (re, im) Legendre coefficients: (c0.re, c0.im, c1.re, ...).
Eigen::VectorXd flatten(const ComplexPoly& legendre);
ComplexPoly unflatten(const Eigen::VectorXd& flat);

/// Householder reflection of a flattened coefficient vector together with
/// the orthonormal curves its last 2m+1 columns describe.
struct OrthoBasis {
    Eigen::MatrixXd q;               ///< (2m+2) x (2m+2), orthogonal and symmetric
    Eigen::VectorXd g;               ///< Householder vector a + sign(a_0) |a| e_1
    std::vector<ComplexPoly> curves; ///< b_1 .. b_{2m+1}, Legendre basis
    Eigen::MatrixXcd complex_q;      ///< (m+1) x (2m+1): odd rows + i * even rows

    int dimension() const { return static_cast<int>(curves.size()); }
};

/// Q = I - 2 g g^T / (g^T g) with sign(0) taken as +1. Throws
/// ErrorKind::DegenerateInput when |a| < kDegenerateNorm.
OrthoBasis householder(const Eigen::VectorXd& a);

/// Householder basis for the Legendre coefficients of `w`.
OrthoBasis orthogonal_basis(const ComplexPoly& w);

/// sum_k xi_k b_k, a Legendre polynomial with Re<w, result> = 0.
ComplexPoly orthogonal_family(const OrthoBasis& basis, std::span<const double> xi);

/// (d(t), c(t)) = (Re, Im) of r(t) conj(s(t)): dot product and the
/// out-of-plane cross product component.
std::pair<double, double> dot_cross(const ComplexPoly& r, const ComplexPoly& s, double t);

struct OrthoPhOptions {
    int starts = 512;
    double dedup_radius = 1e-6;
    double tolerance = 1e-12;  ///< Newton tolerance on the scaled residual
};

enum class OrthoPhKind {
    Regular,  ///< hodograph is the square of a polynomial pre-image
    Linear,   ///< straight line traversed with the prescribed speed
    Scaled,   ///< lambda(t) w(t)^2 with a nonconstant real factor lambda
};

const char* to_string(OrthoPhKind kind);

struct OrthoPhSolution {
    Eigen::VectorXd xi;
    std::vector<Complex> controls;         ///< Bezier points of the orthogonal curve
    ComplexPoly hodograph = ComplexPoly::zero(Basis::Bernstein, 0);  ///< degree n-1
    std::optional<ComplexPoly> preimage;   ///< present for OrthoPhKind::Regular
    OrthoPhKind kind = OrthoPhKind::Regular;
    double residual = 0.0;                 ///< max of the scaled system residual
    double arc_length = 0.0;               ///< integral of |hodograph|
};

struct OrthoPhResult {
    std::vector<OrthoPhSolution> solutions;
    solve::SolutionSet raw;
};

/// Curves of the same degree as `curve`, orthogonal to it, starting at
/// `start`, whose speed |r'(t)| equals `speed` (a real polynomial of degree
/// n-1 where n is the curve degree).
///
/// Unknowns are the 2n+1 coefficients xi of the orthogonal basis; equations
/// are the start point (2) and x'^2 + y'^2 = sigma^2 coefficient-wise
/// (2n-1). Solved by Newton multistart from Halton points.
OrthoPhResult orthogonal_ph_with_speed(const ComplexPoly& curve, const ComplexPoly& speed,
                                       Complex start = {}, const OrthoPhOptions& options = {});

inline OrthoPhResult orthogonal_ph_with_speed(const PHCurve& curve, const ComplexPoly& speed,
                                              Complex start = {},
                                              const OrthoPhOptions& options = {}) {
    return orthogonal_ph_with_speed(curve.as_poly(), speed, start, options);
}

} // namespace phforge
