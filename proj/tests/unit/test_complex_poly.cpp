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

#include "phforge/complex_poly.hpp"
#include "phforge/conversion.hpp"
#include "phforge/error.hpp"

using namespace phforge;

TEST_SUITE("complex_poly") {

TEST_CASE("constructor rejects empty and non-finite coefficients") {
    CHECK_THROWS_AS(ComplexPoly::bernstein({}), Error);
    CHECK_THROWS_AS(ComplexPoly::bernstein({{1, NAN}}), Error);
    CHECK_THROWS_AS(ComplexPoly::legendre({{INFINITY, 0}}), Error);
}

TEST_CASE("binomial table") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(10, 0) == 1);
    CHECK(binomial(20, 10) == 184756);
    CHECK(binomial(3, 4) == 0);
}

TEST_CASE("orthonormal Legendre polynomials match their closed forms") {
    for (double t : {0.0, 0.1, 0.37, 0.5, 0.9, 1.0}) {
        const double x = 2 * t - 1;
        CHECK(legendre_basis(0, t) == doctest::Approx(1.0));
        CHECK(legendre_basis(1, t) == doctest::Approx(std::sqrt(3.0) * x));
        CHECK(legendre_basis(2, t) == doctest::Approx(std::sqrt(5.0) * (1.5 * x * x - 0.5)));
        CHECK(legendre_basis(3, t) == doctest::Approx(std::sqrt(7.0) * (2.5 * x * x * x - 1.5 * x)));
    }
}

TEST_CASE("de Casteljau agrees with the Bernstein sum") {
    test::Gen g;
    for (int i = 0; i < 200; ++i) {
        auto p = g.poly_exact(g.integer(0, 8));
        const double t = g.uniform(0, 1);
        Complex sum{};
        for (int k = 0; k <= p.degree(); ++k) sum += p[k] * bernstein_basis(p.degree(), k, t);
        CHECK(std::abs(de_casteljau(p.coeffs(), t) - sum) < 1e-12);
    }
}

TEST_CASE("degree elevation keeps values") {
    test::Gen g;
    for (Basis b : {Basis::Bernstein, Basis::Legendre}) {
        for (int i = 0; i < 100; ++i) {
            auto p = g.poly_exact(g.integer(0, 5), b);
            auto q = elevate(p, p.degree() + g.integer(0, 4));
            const double t = g.uniform(0, 1);
            CHECK(std::abs(eval(p, t) - eval(q, t)) < 1e-12);
        }
    }
    CHECK_THROWS_AS(elevate(ComplexPoly::bernstein({1, 2, 3}), 1), Error);
}

TEST_CASE("sums across bases and degrees evaluate pointwise") {
    test::Gen g;
    for (int i = 0; i < 100; ++i) {
        auto a = g.poly_exact(g.integer(0, 5), Basis::Bernstein);
        auto b = g.poly_exact(g.integer(0, 5), Basis::Legendre);
        const double t = g.uniform(0, 1);
        CHECK(std::abs(eval(a + b, t) - (eval(a, t) + eval(b, t))) < 1e-12);
        CHECK(std::abs(eval(a - b, t) - (eval(a, t) - eval(b, t))) < 1e-12);
        CHECK((a + b).basis() == Basis::Bernstein);
        CHECK(std::abs(eval(a.conj(), t) - std::conj(eval(a, t))) < 1e-14);
    }
}

TEST_CASE("power basis to Bernstein") {
    // 20 - 40 t + 38 t^2
    const double power[] = {20, -40, 38};
    auto p = from_power(power);
    CHECK(approx_equal(p, ComplexPoly::bernstein({20, 0, 18})));
}

}
