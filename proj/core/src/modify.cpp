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

#include "phforge/modify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "phforge/conversion.hpp"
#include "phforge/error.hpp"
#include "phforge/inner_product.hpp"

namespace phforge {

namespace {

struct SchemeName {
    PerturbScheme scheme;
    const char* name;
};

constexpr SchemeName kSchemeNames[] = {
    {PerturbScheme::EqualMagnitudeLegendre, "equal-legendre"},
    {PerturbScheme::EqualMagnitudeBernstein, "equal-bernstein"},
    {PerturbScheme::TangentPreservingBernstein, "tangent-bernstein"},
    {PerturbScheme::TangentPreservingLegendre, "tangent-legendre"},
    {PerturbScheme::EndpointEqualAngle, "endpoint-equal-angle"},
    {PerturbScheme::EndpointsAndTangentsQuintic, "endpoints-tangents-quintic"},
    {PerturbScheme::Orthogonal, "arc-length"},
};

std::vector<double> broadcast(std::span<const double> v, int size, const char* what) {
    if (v.size() == 1) return std::vector<double>(static_cast<std::size_t>(size), v[0]);
    if (static_cast<int>(v.size()) != size)
        throw Error(ErrorKind::Arity, std::string(what) + ": expected 1 or " +
                                          std::to_string(size) + " values, got " +
                                          std::to_string(v.size()));
    return {v.begin(), v.end()};
}

void check_degree(int m) {
    if (m < 0 || m > kMaxDegree)
        throw Error(ErrorKind::InvalidArgument, "degree out of range: " + std::to_string(m));
}

std::vector<Complex> coeffs_in(const ComplexPoly& w, Basis basis) {
    ComplexPoly c = convert(w, basis);
    return {c.coeffs().begin(), c.coeffs().end()};
}

void require_canonical(const ComplexPoly& w) {
    CanonicalCheck check = is_canonical(w);
    if (!check.canonical)
        throw Error(ErrorKind::NotCanonical,
                    "pre-image is not canonical (residual " + std::to_string(check.residual) + ")");
}

// Im(conj(u) x) / (|u| |x|): sine of the angle between the lines through u and x.
double line_mismatch(Complex u, Complex x) {
    double ax = std::abs(x);
    if (ax == 0.0) return 0.0;
    return std::imag(std::conj(u) * x) / (std::abs(u) * ax);
}

bool flips(Complex w_end, Complex delta_end) {
    return std::real(std::conj(w_end) * (w_end + delta_end)) < 0.0;
}

} // namespace

const char* to_string(PerturbScheme scheme) {
    for (const auto& entry : kSchemeNames)
        if (entry.scheme == scheme) return entry.name;
    return "unknown";
}

std::optional<PerturbScheme> parse_scheme(std::string_view name) {
    for (const auto& entry : kSchemeNames)
        if (name == entry.name) return entry.scheme;
    return std::nullopt;
}

Perturbation perturbation_from_legendre(std::vector<Complex> delta_c, PerturbScheme scheme) {
    Perturbation p;
    p.scheme = scheme;
    p.delta_legendre = ComplexPoly::legendre(std::move(delta_c));
    p.delta_bernstein = convert(p.delta_legendre, Basis::Bernstein);
    p.norm = norm_of_legendre_perturbation(p.delta_legendre.coeffs());
    return p;
}

Perturbation perturbation_from_bernstein(std::vector<Complex> delta_w, PerturbScheme scheme) {
    Perturbation p;
    p.scheme = scheme;
    p.delta_bernstein = ComplexPoly::bernstein(std::move(delta_w));
    p.delta_legendre = convert(p.delta_bernstein, Basis::Legendre);
    p.norm = norm_of_legendre_perturbation(p.delta_legendre.coeffs());
    return p;
}

Applied apply(const ComplexPoly& w, const Perturbation& p, double bound, Complex p0) {
    if (!(bound >= 0.0))
        throw Error(ErrorKind::InvalidArgument, "bound must be non-negative");
    if (p.delta_legendre.degree() != w.degree())
        throw Error(ErrorKind::Arity, "perturbation degree " +
                                          std::to_string(p.delta_legendre.degree()) +
                                          " does not match pre-image degree " +
                                          std::to_string(w.degree()));
    if (p.norm > bound) throw BoundViolation(p.norm, bound);

    const ComplexPoly& delta =
        w.basis() == Basis::Legendre ? p.delta_legendre : p.delta_bernstein;
    Applied out{w + delta, build_curve(w + delta, p0), 0.0, 0.0, {}};
    PHCurve base = build_curve(w, p0);
    out.preimage_distance = distance(w, out.preimage);
    out.curve_distance = distance(base.as_poly(), out.curve.as_poly());
    out.control_displacements.reserve(base.controls.size());
    for (std::size_t k = 0; k < base.controls.size(); ++k)
        out.control_displacements.push_back(out.curve.controls[k] - base.controls[k]);
    return out;
}

double norm_of_legendre_perturbation(std::span<const Complex> delta_c) {
    double s = 0.0;
    for (Complex c : delta_c) s += std::norm(c);
    return std::sqrt(s);
}

double norm_of_bernstein_perturbation(std::span<const Complex> delta_w) {
    if (delta_w.empty()) throw Error(ErrorKind::InvalidArgument, "empty perturbation");
    const auto& pack = conversion(static_cast<int>(delta_w.size()) - 1);
    return (pack.minv.cast<Complex>() * to_vector(delta_w)).norm();
}

double equal_magnitude_budget(int m, double bound) {
    check_degree(m);
    if (!(bound >= 0.0)) throw Error(ErrorKind::InvalidArgument, "bound must be non-negative");
    return bound / std::sqrt(static_cast<double>(m + 1));
}

double equal_magnitude_factor(std::span<const double> angles) {
    auto phi = [&](int i, int j) { return std::cos(angles[i] - angles[j]); };
    switch (angles.size()) {
    case 2:
        return std::sqrt(phi(0, 1) + 2.0) / std::sqrt(3.0);
    case 3:
        return std::sqrt(3.0 * phi(0, 1) + phi(0, 2) + 3.0 * phi(1, 2) + 8.0) / std::sqrt(15.0);
    case 4:
        return std::sqrt(10.0 * phi(0, 1) + 4.0 * phi(0, 2) + phi(0, 3) + 9.0 * phi(1, 2) +
                         4.0 * phi(1, 3) + 10.0 * phi(2, 3) + 32.0) /
               std::sqrt(70.0);
    default:
        throw Error(ErrorKind::Arity, "closed form needs 2 to 4 angles, got " +
                                          std::to_string(angles.size()));
    }
}

Perturbation equal_magnitude_legendre(int m, std::span<const double> rho,
                                      std::span<const double> phi) {
    check_degree(m);
    auto r = broadcast(rho, m + 1, "rho");
    auto a = broadcast(phi, m + 1, "phi");
    std::vector<Complex> dc(static_cast<std::size_t>(m + 1));
    for (int k = 0; k <= m; ++k) dc[k] = std::polar(r[k], a[k]);
    return perturbation_from_legendre(std::move(dc), PerturbScheme::EqualMagnitudeLegendre);
}

Perturbation equal_magnitude_bernstein(int m, std::span<const double> r,
                                       std::span<const double> phi) {
    check_degree(m);
    auto rr = broadcast(r, m + 1, "r");
    auto a = broadcast(phi, m + 1, "phi");
    std::vector<Complex> dw(static_cast<std::size_t>(m + 1));
    for (int k = 0; k <= m; ++k) dw[k] = std::polar(rr[k], a[k]);
    return perturbation_from_bernstein(std::move(dw), PerturbScheme::EqualMagnitudeBernstein);
}

double tangent_line_angle(Complex z) {
    if (z == Complex{})
        throw Error(ErrorKind::UndefinedTangent, "end coefficient of the pre-image is zero");
    if (z.real() == 0.0) return std::numbers::pi / 2.0;
    return std::atan(z.imag() / z.real());
}

Perturbation tangent_preserving_bernstein(const ComplexPoly& w, std::span<const double> radii,
                                          std::span<const double> interior_angles) {
    auto wb = coeffs_in(w, Basis::Bernstein);
    const int m = static_cast<int>(wb.size()) - 1;
    if (m < 1) throw Error(ErrorKind::InvalidArgument, "pre-image must have degree >= 1");
    if (static_cast<int>(interior_angles.size()) != m - 1)
        throw Error(ErrorKind::Arity, "expected " + std::to_string(m - 1) + " interior angles, got " +
                                          std::to_string(interior_angles.size()));
    auto r = broadcast(radii, m + 1, "radii");
    std::vector<Complex> dw(static_cast<std::size_t>(m + 1));
    dw[0] = std::polar(r[0], tangent_line_angle(wb[0]));
    dw[m] = std::polar(r[m], tangent_line_angle(wb[m]));
    for (int k = 1; k < m; ++k) dw[k] = std::polar(r[k], interior_angles[k - 1]);
    const bool flip = flips(wb[0], dw[0]) || flips(wb[m], dw[m]);
    Perturbation p = perturbation_from_bernstein(std::move(dw), PerturbScheme::TangentPreservingBernstein);
    p.direction_flip = flip;
    return p;
}

double tangent_preserving_radius_for_norm(const ComplexPoly& w,
                                          std::span<const double> interior_angles,
                                          double target) {
    if (!(target >= 0.0)) throw Error(ErrorKind::InvalidArgument, "target norm must be non-negative");
    const double one = 1.0;
    double unit = tangent_preserving_bernstein(w, {&one, 1}, interior_angles).norm;
    if (unit == 0.0) throw Error(ErrorKind::DegenerateInput, "unit perturbation has zero norm");
    return target / unit;
}

TangentLegendreResult tangent_preserving_legendre(const ComplexPoly& w, double rho, double phi0,
                                                  const TangentLegendreOptions& options) {
    auto wb = coeffs_in(w, Basis::Bernstein);
    if (wb.size() != 3)
        throw Error(ErrorKind::Arity, "tangent-preserving Legendre scheme needs a quadratic pre-image");
    if (!(rho > 0.0)) throw Error(ErrorKind::InvalidArgument, "rho must be positive");
    if (options.grid < 1) throw Error(ErrorKind::InvalidArgument, "grid must be positive");
    tangent_line_angle(wb[0]);
    tangent_line_angle(wb[2]);

    const Eigen::MatrixXd& mm = conversion(2).m;
    auto end_values = [&](double p1, double p2) {
        const Complex e[3] = {std::polar(1.0, phi0), std::polar(1.0, p1), std::polar(1.0, p2)};
        Complex first{}, last{};
        for (int k = 0; k < 3; ++k) {
            first += mm(0, k) * e[k];
            last += mm(2, k) * e[k];
        }
        return std::array<Complex, 2>{first, last};
    };
    const Complex u0 = wb[0] / std::abs(wb[0]);
    const Complex u2 = wb[2] / std::abs(wb[2]);
    solve::ResidualFn f = [&](const solve::Vector& x) {
        auto ends = end_values(x[0], x[1]);
        solve::Vector r(2);
        r[0] = std::imag(std::conj(u0) * ends[0]);
        r[1] = std::imag(std::conj(u2) * ends[1]);
        return r;
    };

    const double pi = std::numbers::pi;
    solve::Vector lo(2), hi(2);
    lo << -pi, -pi;
    hi << pi, pi;
    auto starts = solve::grid_box(options.grid, lo, hi);
    solve::MultistartOptions ms;
    ms.dedup_radius = options.dedup_radius;
    ms.periodic = {true, true};

    TangentLegendreResult out;
    out.raw = solve::multistart(f, starts, ms);
    for (const auto& x : out.raw.solutions) {
        TangentLegendreSolution s;
        s.phi1 = x[0];
        s.phi2 = x[1];
        auto ends = end_values(x[0], x[1]);
        s.residual = std::max(std::abs(line_mismatch(wb[0], ends[0])),
                              std::abs(line_mismatch(wb[2], ends[1])));
        s.perturbation = perturbation_from_legendre(
            {std::polar(rho, phi0), std::polar(rho, x[0]), std::polar(rho, x[1])},
            PerturbScheme::TangentPreservingLegendre);
        out.solutions.push_back(std::move(s));
    }
    return out;
}

Complex endpoint_constraint_residual(std::span<const Complex> c, std::span<const Complex> delta_c) {
    if (c.size() != delta_c.size())
        throw Error(ErrorKind::Arity, "coefficient and perturbation sizes differ");
    Complex s{};
    for (std::size_t k = 0; k < c.size(); ++k) s += delta_c[k] * (delta_c[k] + 2.0 * c[k]);
    return s;
}

Complex endpoint_constraint_residual_bernstein(std::span<const Complex> w,
                                               std::span<const Complex> delta_w) {
    if (w.size() != delta_w.size() || w.empty())
        throw Error(ErrorKind::Arity, "coefficient and perturbation sizes differ");
    const Eigen::MatrixXd& g = conversion(static_cast<int>(w.size()) - 1).g;
    Eigen::VectorXcd dw = to_vector(delta_w);
    Eigen::VectorXcd rhs = dw + 2.0 * to_vector(w);
    return (dw.transpose() * g.cast<Complex>() * rhs)(0, 0);
}

EqualAngleResult endpoint_preserving_equal_angle(const ComplexPoly& w, double d, double phi) {
    auto c = coeffs_in(w, Basis::Legendre);
    if (c.size() != 3)
        throw Error(ErrorKind::Arity, "equal-angle scheme needs a quadratic pre-image");
    if (!(d > 0.0)) throw Error(ErrorKind::InvalidArgument, "d must be positive");
    require_canonical(w);

    // With dc_k = rho_k e^{i phi} and sum rho_k^2 = d^2 the end-point condition
    // becomes sum rho_k c_k = -d^2 e^{i phi} / 2, two real linear equations.
    const Complex target = -0.5 * d * d * std::polar(1.0, phi);
    const double a11 = c[1].real(), a12 = c[2].real();
    const double a21 = c[1].imag(), a22 = c[2].imag();
    const double det = a11 * a22 - a12 * a21;
    if (std::abs(det) < 1e-14)
        throw Error(ErrorKind::DegenerateInput, "c_1 and c_2 are linearly dependent over the reals");
    // rho_1, rho_2 = A^{-1} (target - rho_0 c_0)
    auto solve2 = [&](double x, double y) {
        return std::array<double, 2>{(a22 * x - a12 * y) / det, (-a21 * x + a11 * y) / det};
    };
    auto off = solve2(target.real(), target.imag());
    auto slope = solve2(-c[0].real(), -c[0].imag());

    EqualAngleResult out;
    out.slope1 = slope[0];
    out.offset1 = off[0];
    out.slope2 = slope[1];
    out.offset2 = off[1];
    out.quad_a = 1.0 + slope[0] * slope[0] + slope[1] * slope[1];
    out.quad_b = 2.0 * (slope[0] * off[0] + slope[1] * off[1]);
    out.quad_c = off[0] * off[0] + off[1] * off[1] - d * d;
    auto roots = solve::quadratic_real(out.quad_a, out.quad_b, out.quad_c);
    out.discriminant = roots.discriminant;
    for (double r0 : roots.roots) {
        EqualAngleSolution s;
        s.rho = {r0, out.slope1 * r0 + out.offset1, out.slope2 * r0 + out.offset2};
        std::vector<Complex> dc(3);
        for (int k = 0; k < 3; ++k) dc[k] = std::polar(1.0, phi) * s.rho[k];
        s.perturbation = perturbation_from_legendre(std::move(dc), PerturbScheme::EndpointEqualAngle);
        out.solutions.push_back(std::move(s));
    }
    return out;
}

QuinticEndpointResult endpoints_and_tangents_quintic(const ComplexPoly& w, double r) {
    auto wb = coeffs_in(w, Basis::Bernstein);
    if (wb.size() != 3)
        throw Error(ErrorKind::Arity, "quintic scheme needs a quadratic pre-image");
    require_canonical(w);
    const Eigen::MatrixXd& g = conversion(2).g;

    const Complex d0 = std::polar(r, tangent_line_angle(wb[0]));
    const Complex d2 = std::polar(r, tangent_line_angle(wb[2]));
    const Complex dd[3] = {d0, {}, d2};
    // dW = dd + x e_1 and dW^T G (dW + 2W) = 0 is quadratic in x.
    Complex ddgdd{}, ddgw{}, g1w{};
    for (int i = 0; i < 3; ++i) {
        g1w += g(1, i) * wb[i];
        for (int j = 0; j < 3; ++j) {
            ddgdd += dd[i] * g(i, j) * dd[j];
            ddgw += dd[i] * g(i, j) * wb[j];
        }
    }
    const Complex qa = g(1, 1);
    const Complex qb = 2.0 * (g(1, 0) * d0 + g(1, 2) * d2) + 2.0 * g1w;
    const Complex qc = ddgdd + 2.0 * ddgw;

    QuinticEndpointResult out;
    out.delta_w1 = solve::quadratic_complex(qa, qb, qc);
    for (Complex x : out.delta_w1) {
        out.solutions.push_back(perturbation_from_bernstein(
            {d0, x, d2}, PerturbScheme::EndpointsAndTangentsQuintic));
        out.solutions.back().direction_flip = flips(wb[0], d0) || flips(wb[2], d2);
    }
    std::stable_sort(out.solutions.begin(), out.solutions.end(),
                     [](const Perturbation& a, const Perturbation& b) {
                         if (a.norm != b.norm) return a.norm < b.norm;
                         return a.delta_bernstein[1].real() < b.delta_bernstein[1].real();
                     });
    out.delta_w1 = {out.solutions[0].delta_bernstein[1], out.solutions[1].delta_bernstein[1]};
    return out;
}

double min_branch_norm(const ComplexPoly& w, double r) {
    return endpoints_and_tangents_quintic(w, r).solutions.front().norm;
}

std::vector<double> find_r_for_norm(const ComplexPoly& w, double target,
                                    const FindROptions& options) {
    if (!(target > 0.0)) throw Error(ErrorKind::InvalidArgument, "target norm must be positive");
    if (!(options.lo < options.hi)) throw Error(ErrorKind::InvalidArgument, "empty search interval");
    require_canonical(w);
    solve::BracketOptions bo;
    bo.intervals = options.intervals;
    return solve::bracket_roots([&](double r) { return min_branch_norm(w, r) - target; },
                                options.lo, options.hi, bo);
}

PHCurve centroid_aligned(const PHCurve& c, const PHCurve& reference) {
    auto centroid = [](const PHCurve& x) {
        Complex s{};
        for (Complex p : x.controls) s += p;
        return s / static_cast<double>(x.controls.size());
    };
    const Complex shift = centroid(reference) - centroid(c);
    return build_curve(c.preimage, c.p0 + shift);
}

double curve_distance(const PHCurve& a, const PHCurve& b, bool centroid_align) {
    if (!centroid_align) return distance(a.as_poly(), b.as_poly());
    return distance(a.as_poly(), centroid_aligned(b, a).as_poly());
}

std::vector<PHCurve> sample_family(const ComplexPoly& w, const FamilyGenerator& generator,
                                   std::span<const double> grid, bool centroid_align,
                                   Complex p0) {
    PHCurve base = build_curve(w, p0);
    std::vector<PHCurve> out;
    for (double g : grid) {
        for (const Perturbation& p : generator(g)) {
            PHCurve c = apply(w, p, std::numeric_limits<double>::infinity(), p0).curve;
            out.push_back(centroid_align ? centroid_aligned(c, base) : std::move(c));
        }
    }
    return out;
}

} // namespace phforge
