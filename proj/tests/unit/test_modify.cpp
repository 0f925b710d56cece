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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "gen.hpp"

#include "phforge/conversion.hpp"
#include "phforge/error.hpp"
#include "phforge/inner_product.hpp"
#include "phforge/modify.hpp"

using namespace phforge;

namespace {

constexpr double kPi = std::numbers::pi;

ComplexPoly quintic() { return ComplexPoly::bernstein({{5, 2}, {-3, -4}, {5, 1}}); }
ComplexPoly canonical() { return ComplexPoly::legendre({{2, -1}, {1, 2}, {-1, 0}}); }

} // namespace

TEST_SUITE("modify") {

TEST_CASE("scheme names round trip") {
    for (auto s : {PerturbScheme::EqualMagnitudeLegendre, PerturbScheme::EqualMagnitudeBernstein,
                   PerturbScheme::TangentPreservingBernstein, PerturbScheme::TangentPreservingLegendre,
                   PerturbScheme::EndpointEqualAngle, PerturbScheme::EndpointsAndTangentsQuintic,
                   PerturbScheme::Orthogonal})
        CHECK(parse_scheme(to_string(s)) == s);
    CHECK_FALSE(parse_scheme("nope").has_value());
}

TEST_CASE("equal-magnitude budget attains the bound") {
    CHECK(equal_magnitude_budget(2, 0.25) == doctest::Approx(0.25 / std::sqrt(3.0)));
    test::Gen g;
    for (int i = 0; i < 100; ++i) {
        const int m = g.integer(0, 6);
        const double rho = equal_magnitude_budget(m, 0.3);
        std::vector<double> phi(m + 1);
        for (auto& p : phi) p = g.uniform(-kPi, kPi);
        CHECK(equal_magnitude_legendre(m, {&rho, 1}, phi).norm == doctest::Approx(0.3).epsilon(1e-14));
    }
}

TEST_CASE("closed-form factors agree with the matrix path and never exceed 1") {
    test::Gen g;
    for (int m = 1; m <= 3; ++m) {
        for (int i = 0; i < 10000; ++i) {
            std::vector<double> phi(m + 1);
            for (auto& p : phi) p = g.uniform(-kPi, kPi);
            const double f = equal_magnitude_factor(phi);
            CHECK(f <= 1.0 + 1e-15);
            if (i % 100 == 0) {
                const double one = 1.0;
                CHECK(f == doctest::Approx(equal_magnitude_bernstein(m, {&one, 1}, phi).norm).epsilon(1e-12));
            }
        }
        std::vector<double> same(m + 1, 0.7);
        CHECK(equal_magnitude_factor(same) == doctest::Approx(1.0));
    }
    const double four[5] = {};
    CHECK_THROWS_AS(equal_magnitude_factor(four), Error);
}

TEST_CASE("norm paths agree with quadrature") {
    test::Gen g;
    const GaussRule rule = gauss_legendre(12);
    for (int i = 0; i < 200; ++i) {
        auto dc = g.poly_exact(g.integer(0, 5), Basis::Legendre);
        double q = 0.0;
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) q += rule.weights[k] * std::norm(eval(dc, rule.nodes[k]));
        CHECK(norm_of_legendre_perturbation(dc.coeffs()) == doctest::Approx(std::sqrt(q)).epsilon(1e-12));
        auto dw = convert(dc, Basis::Bernstein);
        CHECK(norm_of_bernstein_perturbation(dw.coeffs()) == doctest::Approx(std::sqrt(q)).epsilon(1e-12));
    }
}

TEST_CASE("apply enforces the bound and reports distances") {
    const ComplexPoly w = quintic();
    const double rho = 0.2, phi = 0.4;
    const Perturbation p = equal_magnitude_legendre(2, {&rho, 1}, {&phi, 1});
    const Applied a = apply(w, p, 1.0);
    CHECK(a.preimage_distance == doctest::Approx(p.norm).epsilon(1e-12));
    CHECK(a.control_displacements.size() == 6);
    try {
        apply(w, p, 0.1);
        FAIL("expected a bound violation");
    } catch (const BoundViolation& e) {
        CHECK(e.excess() == doctest::Approx(p.norm - 0.1));
        CHECK(e.kind() == ErrorKind::BoundViolation);
    }
    const double zero = 0.0;
    const Applied same = apply(w, equal_magnitude_legendre(2, {&zero, 1}, {&zero, 1}));
    CHECK(same.curve_distance == 0.0);
}

TEST_CASE("tangent-preserving Bernstein keeps end directions") {
    test::Gen g;
    for (int i = 0; i < 200; ++i) {
        const int m = g.integer(1, 5);
        auto w = g.poly_exact(m);
        std::vector<double> inner(m - 1), radii(m + 1);
        for (auto& a : inner) a = g.uniform(-kPi, kPi);
        for (auto& r : radii) r = g.uniform(0, 0.3);
        const Perturbation p = tangent_preserving_bernstein(w, radii, inner);
        const ComplexPoly moved = w + p.delta_bernstein;
        // the tangent r'(t) = w^2 at both ends keeps its direction
        for (int end : {0, m}) {
            const Complex before = w[end] * w[end], after = moved[end] * moved[end];
            CHECK(std::abs(std::imag(std::conj(before) * after)) < 1e-12 * std::abs(before) * std::abs(after) + 1e-15);
            CHECK(std::real(std::conj(before) * after) > 0);
        }
    }
    CHECK_THROWS_AS(tangent_line_angle(0.0), Error);
    CHECK(tangent_line_angle(Complex(0, -1)) == doctest::Approx(kPi / 2));
    CHECK(tangent_line_angle(Complex(-1, -1)) == doctest::Approx(kPi / 4));
}

TEST_CASE("negative radius past the end coefficient is flagged") {
    const ComplexPoly w = ComplexPoly::bernstein({{1, 0}, {0, 1}, {2, 0}});
    const double inner = 0.0;
    const double small[3] = {-0.5, 0.1, 0.1}, big[3] = {-1.5, 0.1, 0.1};
    CHECK_FALSE(tangent_preserving_bernstein(w, small, {&inner, 1}).direction_flip);
    CHECK(tangent_preserving_bernstein(w, big, {&inner, 1}).direction_flip);
}

TEST_CASE("tangent-preserving Legendre solutions keep both tangent lines") {
    const auto res = tangent_preserving_legendre(quintic(), 0.25 / std::sqrt(3.0), 0.0);
    REQUIRE(res.solutions.size() == 4);
    for (const auto& s : res.solutions) {
        const ComplexPoly moved = quintic() + s.perturbation.delta_bernstein;
        CHECK(std::abs(std::imag(std::conj(quintic()[0]) * moved[0])) < 1e-8);
        CHECK(std::abs(std::imag(std::conj(quintic()[2]) * moved[2])) < 1e-8);
    }
    CHECK_THROWS_AS(tangent_preserving_legendre(ComplexPoly::bernstein({1, 2}), 0.1, 0), Error);
}

TEST_CASE("end-point residual") {
    const ComplexPoly c = canonical();
    std::vector<Complex> zero(3), flip(3);
    for (int k = 0; k < 3; ++k) flip[k] = -2.0 * c[k];
    CHECK(endpoint_constraint_residual(c.coeffs(), zero) == Complex{});
    CHECK(std::abs(endpoint_constraint_residual(c.coeffs(), flip)) < 1e-14);
    test::Gen g;
    const ComplexPoly wb = convert(c, Basis::Bernstein);
    for (int i = 0; i < 100; ++i) {
        auto dc = g.poly_exact(2, Basis::Legendre, 0.3);
        auto dw = convert(dc, Basis::Bernstein);
        CHECK(std::abs(endpoint_constraint_residual(c.coeffs(), dc.coeffs()) -
                       endpoint_constraint_residual_bernstein(wb.coeffs(), dw.coeffs())) < 1e-12);
        // the residual is exactly the change of r(1) - r(0)
        const PHCurve before = build_curve(c), after = build_curve(c + dc);
        const Complex chord = (after.controls.back() - after.controls.front()) - (before.controls.back() - before.controls.front());
        CHECK(std::abs(chord - endpoint_constraint_residual(c.coeffs(), dc.coeffs())) < 1e-12);
    }
}

TEST_CASE("equal-angle perturbations keep the end points") {
    for (double phi : {-3.0, -1.0, 0.0, 0.5, 2.0}) {
        auto res = endpoint_preserving_equal_angle(canonical(), 0.1, phi);
        REQUIRE(res.solutions.size() == 2);
        for (const auto& s : res.solutions) {
            CHECK(s.perturbation.norm == doctest::Approx(0.1).epsilon(1e-12));
            const PHCurve c = apply(canonical(), s.perturbation).curve;
            CHECK(std::abs(c.controls.back() - 1.0) < 1e-12);
        }
    }
    CHECK_THROWS_AS(endpoint_preserving_equal_angle(quintic(), 0.1, 0), Error);
    CHECK_THROWS_AS(endpoint_preserving_equal_angle(canonical(), -0.1, 0), Error);
}

TEST_CASE("end points and tangents: r = 0 contains the identity") {
    const ComplexPoly w = convert(canonical(), Basis::Bernstein);
    auto res = endpoints_and_tangents_quintic(w, 0.0);
    CHECK(res.solutions[0].norm < 1e-14);
    auto rs = find_r_for_norm(w, 1e-3);
    REQUIRE(rs.size() == 2);
    CHECK(std::abs(rs[0]) < 1e-2);
    CHECK(std::abs(rs[1]) < 1e-2);
    for (double r : {-0.3, 0.1, 0.4}) {
        for (const auto& p : endpoints_and_tangents_quintic(w, r).solutions) {
            const PHCurve c = apply(w, p).curve;
            CHECK(std::abs(c.controls.back() - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("family sampling") {
    const ComplexPoly w = quintic();
    std::vector<double> grid(360);
    for (int i = 0; i < 360; ++i) grid[i] = -kPi + 2 * kPi * (i + 1) / 360;
    auto family = sample_family(
        w,
        [&](double phi1) {
            const double r = 0.25;
            return std::vector<Perturbation>{tangent_preserving_bernstein(w, {&r, 1}, {&phi1, 1})};
        },
        grid, true);
    REQUIRE(family.size() == 360);
    const PHCurve base = build_curve(w);
    for (const auto& c : family) {
        Complex a{}, b{};
        for (int k = 0; k < 6; ++k) {
            a += c.controls[k];
            b += base.controls[k];
        }
        CHECK(std::abs(a - b) < 1e-12);
    }
    auto pairs = sample_family(
        canonical(),
        [&](double phi) {
            std::vector<Perturbation> out;
            for (const auto& s : endpoint_preserving_equal_angle(canonical(), 0.1, phi).solutions)
                out.push_back(s.perturbation);
            return out;
        },
        grid, false);
    CHECK(pairs.size() == 720);
}

}
