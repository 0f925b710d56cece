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

#include "phforge/conversion.hpp"
#include "phforge/error.hpp"
#include "phforge/inner_product.hpp"
#include "phforge/phcore.hpp"

using namespace phforge;

TEST_SUITE("phcore") {

TEST_CASE("cubic from a linear pre-image") {
    const PHCurve c = build_curve(ComplexPoly::bernstein({{5, 2}, {-3, -5}}));
    const Complex expected[4] = {0, {7, 20.0 / 3}, {16.0 / 3, -11.0 / 3}, {0, 19.0 / 3}};
    for (int k = 0; k < 4; ++k) CHECK(std::abs(c.controls[k] - expected[k]) < 1e-14);
    CHECK(arc_length(c.preimage) == doctest::Approx(38.0 / 3));
    CHECK(verify_ph(c).is_ph);
}

TEST_CASE("hodograph of the curve equals w squared") {
    test::Gen g;
    for (int i = 0; i < 100; ++i) {
        auto w = g.poly_exact(g.integer(1, 4), g.integer(0, 1) ? Basis::Bernstein : Basis::Legendre);
        const PHCurve c = build_curve(w, g.complex());
        const double t = g.uniform(0, 1), h = 1e-5;
        const Complex dr = (eval_curve(c, t + h) - eval_curve(c, t - h)) / (2 * h);
        const Complex w_t = eval(w, t);
        CHECK(std::abs(dr - w_t * w_t) < 1e-6 * std::max(1.0, std::norm(w_t)));
        CHECK(std::abs(c.controls.back() - c.controls.front() - canonical_value_bernstein(w)) < 1e-12);
        CHECK(std::abs(canonical_value_legendre(w) - canonical_value_bernstein(w)) < 1e-12);
    }
}

TEST_CASE("editing a control point breaks the PH property") {
    PHCurve c = build_curve(ComplexPoly::bernstein({{1, 1}, {2, -1}, {0, 1}}));
    CHECK(verify_ph(c).is_ph);
    c.controls[2] += Complex(0.1, 0);
    CHECK_FALSE(verify_ph(c).is_ph);
}

TEST_CASE("zero pre-image and closed curves are rejected") {
    CHECK_THROWS_AS(build_curve(ComplexPoly::zero(Basis::Bernstein, 2)), Error);
    // sum c_k^2 = 1 + i^2 = 0, so r(1) = r(0)
    const ComplexPoly w = ComplexPoly::legendre({1, Complex(0, 1)});
    CHECK(std::abs(canonical_value_legendre(w)) < 1e-15);
    CHECK_THROWS_AS(to_canonical(build_curve(w)), Error);
}

TEST_CASE("canonical form and its inverse") {
    const PHCurve c = build_curve(ComplexPoly::bernstein({{5, 2}, {-3, -4}, {5, 1}}), Complex(2, -1));
    auto [canon, t] = to_canonical(c);
    CHECK(std::abs(canon.controls.front()) < 1e-14);
    CHECK(std::abs(canon.controls.back() - 1.0) < 1e-13);
    CHECK(is_canonical(canon.preimage).canonical);
    const PHCurve back = t.invert(canon);
    for (std::size_t k = 0; k < c.controls.size(); ++k) CHECK(std::abs(back.controls[k] - c.controls[k]) < 1e-12);
}

TEST_CASE("principal square root branch") {
    CHECK(principal_sqrt(Complex(-4, 0)) == Complex(0, 2));
    CHECK(principal_sqrt(Complex(0, -2)).real() > 0);
    test::Gen g;
    for (int i = 0; i < 100; ++i) {
        const Complex z = g.complex(3);
        const Complex s = principal_sqrt(z);
        CHECK(std::abs(s * s - z) < 1e-12);
        CHECK(s.real() >= 0);
    }
}

TEST_CASE("sampling") {
    const PHCurve c = build_curve(ComplexPoly::bernstein({1, 1}));
    auto pts = sample(c, 5);
    REQUIRE(pts.size() == 5);
    CHECK(std::abs(pts[2] - Complex(0.5, 0)) < 1e-15);
    CHECK_THROWS_AS(sample(c, 1), Error);
}

}
