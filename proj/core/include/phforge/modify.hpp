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
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "phforge/complex_poly.hpp"
#include "phforge/phcore.hpp"
#include "phforge/solvekit.hpp"

namespace phforge {

enum class PerturbScheme {
    EqualMagnitudeLegendre,
    EqualMagnitudeBernstein,
    TangentPreservingBernstein,
    TangentPreservingLegendre,
    EndpointEqualAngle,
    EndpointsAndTangentsQuintic,
    Orthogonal,  ///< arc-length modification
};

/// CLI / service name, e.g. "endpoints-tangents-quintic".
const char* to_string(PerturbScheme scheme);
std::optional<PerturbScheme> parse_scheme(std::string_view name);

/// A pre-image perturbation dw held in both bases. `norm` is ||dw||, which
/// equals the Euclidean norm of the Legendre coefficients.
struct Perturbation {
    PerturbScheme scheme = PerturbScheme::EqualMagnitudeLegendre;
    ComplexPoly delta_legendre = ComplexPoly::zero(Basis::Legendre, 0);
    ComplexPoly delta_bernstein = ComplexPoly::zero(Basis::Bernstein, 0);
    double norm = 0.0;
    /// Set by the tangent schemes when a perturbed end coefficient points
    /// opposite to the original one (negative radius past |w_end|).
    bool direction_flip = false;
};

Perturbation perturbation_from_legendre(std::vector<Complex> delta_c, PerturbScheme scheme);
Perturbation perturbation_from_bernstein(std::vector<Complex> delta_w, PerturbScheme scheme);

/// Result of applying a perturbation to a pre-image.
struct Applied {
    ComplexPoly preimage;                       ///< w + dw, in the basis of w
    PHCurve curve;
    double preimage_distance = 0.0;             ///< distance(w, w + dw)
    double curve_distance = 0.0;                ///< distance(r, r~), origin-anchored
    std::vector<Complex> control_displacements; ///< dp_k
};

/// Builds w + dw and its curve (same integration constant as `p0`).
/// Throws BoundViolation when ||dw|| exceeds `bound`.
Applied apply(const ComplexPoly& w, const Perturbation& p,
              double bound = std::numeric_limits<double>::infinity(), Complex p0 = {});

// -- norms and budgets ------------------------------------------------------

double norm_of_legendre_perturbation(std::span<const Complex> delta_c);

/// ||M^{-1} dW||_2 through the conversion matrix.
double norm_of_bernstein_perturbation(std::span<const Complex> delta_w);

/// Largest equal Legendre magnitude rho with sqrt(m+1) rho <= bound.
double equal_magnitude_budget(int m, double bound);

/// ||dw|| / r for equal Bernstein magnitudes r and angles phi_k, in closed
/// form with Phi_ij = cos(phi_i - phi_j). Available for m = 1, 2, 3.
double equal_magnitude_factor(std::span<const double> angles);

// -- schemes ------------------------------------------------------------------

/// dc_k = rho_k exp(i phi_k). A single rho or phi is broadcast.
Perturbation equal_magnitude_legendre(int m, std::span<const double> rho,
                                      std::span<const double> phi);

/// dw_k = r_k exp(i phi_k). A single r or phi is broadcast.
Perturbation equal_magnitude_bernstein(int m, std::span<const double> r,
                                       std::span<const double> phi);

/// Angle of the line through 0 and z, in (-pi/2, pi/2]. The curve tangent
/// r'(0) = w_0^2 keeps its direction whenever w_0 + dw_0 stays on this line.
/// Throws ErrorKind::UndefinedTangent for z == 0.
double tangent_line_angle(Complex z);

/// Bernstein perturbation whose end coefficients lie on the tangent lines of
/// w_0 and w_m; `interior_angles` supplies phi_1 .. phi_{m-1}.
Perturbation tangent_preserving_bernstein(const ComplexPoly& w, std::span<const double> radii,
                                          std::span<const double> interior_angles);

/// Equal radius r for which tangent_preserving_bernstein reaches ||dw|| = target.
double tangent_preserving_radius_for_norm(const ComplexPoly& w,
                                          std::span<const double> interior_angles,
                                          double target);

struct TangentLegendreSolution {
    double phi1 = 0.0;
    double phi2 = 0.0;
    double residual = 0.0;  ///< max |sin| of the end-direction mismatch
    Perturbation perturbation;
};

struct TangentLegendreResult {
    std::vector<TangentLegendreSolution> solutions;
    solve::SolutionSet raw;
};

struct TangentLegendreOptions {
    int grid = 64;
    double dedup_radius = 1e-6;
};

/// Quadratic pre-images only: equal Legendre magnitudes rho, fixed phi_0,
/// and (phi_1, phi_2) chosen so both end coefficients of dw stay on the
/// tangent lines of w_0 and w_2.
TangentLegendreResult tangent_preserving_legendre(const ComplexPoly& w, double rho, double phi0,
                                                  const TangentLegendreOptions& options = {});

/// dC^T (dC + 2C) with unconjugated products. Zero exactly when the
/// perturbed canonical curve keeps r(0) = 0 and r(1) = 1.
Complex endpoint_constraint_residual(std::span<const Complex> c, std::span<const Complex> delta_c);

/// The Bernstein form dW^T G (dW + 2W).
Complex endpoint_constraint_residual_bernstein(std::span<const Complex> w,
                                               std::span<const Complex> delta_w);

struct EqualAngleSolution {
    std::array<double, 3> rho{};
    Perturbation perturbation;
};

/// Equal-angle endpoint-preserving perturbation of a canonical quadratic
/// pre-image. rho_1 = slope1 rho_0 + offset1, rho_2 = slope2 rho_0 + offset2,
/// and rho_0 solves quad_a rho_0^2 + quad_b rho_0 + quad_c = 0.
struct EqualAngleResult {
    double slope1 = 0.0;
    double offset1 = 0.0;
    double slope2 = 0.0;
    double offset2 = 0.0;
    double quad_a = 0.0;
    double quad_b = 0.0;
    double quad_c = 0.0;
    double discriminant = 0.0;
    std::vector<EqualAngleSolution> solutions;  ///< ascending by rho_0
};

EqualAngleResult endpoint_preserving_equal_angle(const ComplexPoly& w, double d, double phi);

struct QuinticEndpointResult {
    std::array<Complex, 2> delta_w1{};
    std::vector<Perturbation> solutions;  ///< ascending by ||dw||, ties by Re dw_1
};

/// dw_0 = r e^{i theta_0}, dw_2 = r e^{i theta_2} on the end tangent lines;
/// dw_1 from the complex quadratic that keeps the canonical end points.
QuinticEndpointResult endpoints_and_tangents_quintic(const ComplexPoly& w, double r);

/// Norm of the smaller-norm branch of endpoints_and_tangents_quintic.
double min_branch_norm(const ComplexPoly& w, double r);

struct FindROptions {
    double lo = -2.0;
    double hi = 2.0;
    int intervals = 400;
};

/// All r in [lo, hi] where the smaller-norm branch reaches ||dw|| = target.
std::vector<double> find_r_for_norm(const ComplexPoly& w, double target,
                                    const FindROptions& options = {});

// -- families and curve distances -------------------------------------------

/// Translates a curve so the centroid of its control points matches the
/// centroid of `reference`.
PHCurve centroid_aligned(const PHCurve& c, const PHCurve& reference);

/// distance between two curves viewed as Bernstein polynomials.
double curve_distance(const PHCurve& a, const PHCurve& b, bool centroid_align);

using FamilyGenerator = std::function<std::vector<Perturbation>(double)>;

/// One curve per perturbation produced at each grid value, in grid order.
std::vector<PHCurve> sample_family(const ComplexPoly& w, const FamilyGenerator& generator,
                                   std::span<const double> grid, bool centroid_align,
                                   Complex p0 = {});

} // namespace phforge
