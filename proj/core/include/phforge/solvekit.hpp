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

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "phforge/complex_poly.hpp"

namespace phforge::solve {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using ResidualFn = std::function<Vector(const Vector&)>;
using JacobianFn = std::function<Matrix(const Vector&)>;

enum class NewtonStatus { Converged, SingularJacobian, MaxIterations, NonFinite };

const char* to_string(NewtonStatus status);

struct NewtonOptions {
    double tolerance = 1e-12;     ///< on the max-norm of the residual
    int max_iterations = 100;
    double fd_step = 1e-7;        ///< forward-difference Jacobian step
    JacobianFn jacobian;          ///< optional analytic Jacobian
};

struct NewtonResult {
    Vector x;
    double residual = 0.0;
    int iterations = 0;
    NewtonStatus status = NewtonStatus::MaxIterations;

    bool converged() const { return status == NewtonStatus::Converged; }
};

/// Newton iteration with step halving whenever a full step increases the
/// residual. Works for square systems; the linear step is solved with a
/// column-pivoted QR so near-singular Jacobians are reported, not hidden.
NewtonResult newton(const ResidualFn& f, Vector x0, const NewtonOptions& options = {});

/// Forward-difference Jacobian.
Matrix fd_jacobian(const ResidualFn& f, const Vector& x, double step);

/// Deduplicated, sorted roots collected from many Newton runs.
struct SolutionSet {
    std::vector<Vector> solutions;
    std::vector<double> residuals;
    int starts_used = 0;
    double converged_fraction = 0.0;
    std::string diagnostics;

    bool empty() const { return solutions.empty(); }
    std::size_t size() const { return solutions.size(); }
};

struct MultistartOptions {
    NewtonOptions newton;
    double dedup_radius = 1e-6;
    /// Coordinates that are angles; they are wrapped into (-pi, pi] and
    /// compared modulo 2 pi.
    std::vector<bool> periodic;
};

/// Runs Newton from every start, keeps converged roots, merges those closer
/// than `dedup_radius` and sorts the rest lexicographically.
SolutionSet multistart(const ResidualFn& f, std::span<const Vector> starts,
                       const MultistartOptions& options = {});

/// Deterministic Halton points in the box [lo, hi].
std::vector<Vector> halton_box(int count, const Vector& lo, const Vector& hi);

/// Regular grid of cell-centred points over [lo, hi] with `per_axis` points
/// along each axis.
std::vector<Vector> grid_box(int per_axis, const Vector& lo, const Vector& hi);

/// Wraps an angle into (-pi, pi].
double wrap_angle(double a);

struct RealQuadratic {
    std::vector<double> roots;  ///< ascending, 0-2 entries
    double discriminant = 0.0;
};

/// Real roots of a x^2 + b x + c. Falls back to the linear equation when
/// a == 0 and throws when a == b == 0 and c != 0.
RealQuadratic quadratic_real(double a, double b, double c);

/// Both complex roots of a z^2 + b z + c, computed without cancellation in
/// the smaller root. A linear equation yields a single root repeated.
std::array<Complex, 2> quadratic_complex(Complex a, Complex b, Complex c);

struct BracketOptions {
    int intervals = 400;
    double tolerance = 1e-13;
    int max_iterations = 200;
};

/// All sign changes of f on [lo, hi] found on a uniform grid and refined by
/// Illinois regula falsi inside each bracket.
std::vector<double> bracket_roots(const std::function<double(double)>& f, double lo, double hi,
                                  const BracketOptions& options = {});

} // namespace phforge::solve
