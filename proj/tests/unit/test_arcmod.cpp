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

#include "doctest.h"
#include "gen.hpp"

#include "phforge/arcmod.hpp"
#include "phforge/conversion.hpp"
#include "phforge/error.hpp"
#include "phforge/inner_product.hpp"

using namespace phforge;

namespace {

ComplexPoly canonical() { return ComplexPoly::legendre({{2, -1}, {1, 2}, {-1, 0}}); }

} // namespace

TEST_SUITE("arcmod") {

TEST_CASE("system shape") {
    const ArcSystem sys = build_system(canonical(), 0.01, {{4, 0.0}, {5, 0.0}});
    CHECK(sys.f.rows() == 5);
    CHECK((sys.f - sys.f.transpose()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(sys.s == doctest::Approx(11.0));
    CHECK(sys.free == std::vector<int>{1, 2, 3});
}

TEST_CASE("bad systems") {
    CHECK_THROWS_AS(build_system(canonical(), 0.01, {{4, 0.0}}), Error);
    CHECK_THROWS_AS(build_system(canonical(), 0.0, {{4, 0.0}, {5, 0.0}}), Error);
    CHECK_THROWS_AS(build_system(canonical(), -0.1, {{4, 0.0}, {5, 0.0}}), Error);
    CHECK_THROWS_AS(build_system(canonical(), 0.01, {{0, 0.0}, {5, 0.0}}), Error);
    CHECK_THROWS_AS(build_system(2.0 * canonical(), 0.01, {{4, 0.0}, {5, 0.0}}), Error);
    try {
        build_system(canonical(), 0.01, {{1, 0.0}, {2, 0.0}, {3, 0.0}});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Arity);
    }
}

TEST_CASE("both residual forms agree") {
    const ArcSystem sys = build_system(canonical(), 0.01, {{2, 0.0}, {3, 0.0}});
    test::Gen g;
    for (int i = 0; i < 200; ++i) {
        Eigen::VectorXd gamma(5);
        for (int k = 0; k < 5; ++k) gamma[k] = g.uniform(-1, 1);
        const Eigen::Vector3d r = arc_residual(sys, gamma);
        const Complex e = arc_residual_expanded(sys, gamma);
        CHECK(std::abs(Complex(r[1], r[2]) - e) < 1e-12);
        // Q gamma is the Legendre perturbation, and q is its end-point residual
        const ComplexPoly dw = orthogonal_family(sys.basis, {gamma.data(), 5});
        const ComplexPoly c = sys.preimage;
        Complex direct{};
        for (int k = 0; k < 3; ++k) direct += dw[k] * (dw[k] + 2.0 * c[k]);
        CHECK(std::abs(direct - e) < 1e-12);
    }
}

TEST_CASE("arc length after a perturbation") {
    const ComplexPoly w = canonical();
    CHECK(arc_length_after(w, Eigen::VectorXd::Zero(5)) == doctest::Approx(11.0));
    const OrthoBasis b = orthogonal_basis(w);
    const GaussRule rule = gauss_legendre(8);
    test::Gen g;
    for (int i = 0; i < 50; ++i) {
        Eigen::VectorXd gamma(5);
        for (int k = 0; k < 5; ++k) gamma[k] = g.uniform(-1, 1);
        gamma /= gamma.norm();
        CHECK(arc_length_after(w, gamma) == doctest::Approx(12.0));
        const ComplexPoly moved = w + orthogonal_family(b, {gamma.data(), 5});
        double q = 0.0;
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) q += rule.weights[k] * std::norm(eval(moved, rule.nodes[k]));
        CHECK(q == doctest::Approx(12.0).epsilon(1e-12));
    }
}

TEST_CASE("solutions do not depend on the start count") {
    const ArcSystem sys = build_system(canonical(), 0.01, {{4, 0.0}, {5, 0.0}});
    ArcOptions more;
    more.starts = 1024;
    const ArcResult a = solve_arc_system(sys), b = solve_arc_system(sys, more);
    REQUIRE(a.solutions.size() == b.solutions.size());
    for (std::size_t i = 0; i < a.solutions.size(); ++i)
        CHECK((a.solutions[i].gamma - b.solutions[i].gamma).norm() < 1e-8);
    for (const auto& s : a.solutions) {
        CHECK(s.gamma.squaredNorm() == doctest::Approx(0.01).epsilon(1e-10));
        CHECK(std::abs(inner_product(sys.preimage, s.perturbation.delta_legendre).real()) < 1e-10);
        const PHCurve c = build_curve(sys.preimage + s.perturbation.delta_legendre);
        CHECK(verify_ph(c).is_ph);
        CHECK(is_canonical(c.preimage).canonical);
    }
}

TEST_CASE("unreachable fixed values give an empty set") {
    const ArcSystem sys = build_system(canonical(), 0.01, {{4, 1.0}, {5, 1.0}});
    const ArcResult r = solve_arc_system(sys);
    CHECK(r.solutions.empty());
    CHECK_FALSE(r.raw.diagnostics.empty());
}

}
