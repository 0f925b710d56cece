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

#include "phforge/error.hpp"
#include "phforge/solvekit.hpp"

using namespace phforge;
using namespace phforge::solve;

TEST_SUITE("solvekit") {

TEST_CASE("Newton on a circle-line intersection") {
    ResidualFn f = [](const Vector& x) {
        Vector r(2);
        r << x[0] * x[0] + x[1] * x[1] - 1, x[0] - x[1];
        return r;
    };
    Vector x0(2);
    x0 << 2, 1;
    auto res = newton(f, x0);
    REQUIRE(res.converged());
    CHECK(res.x[0] == doctest::Approx(std::sqrt(0.5)));
    CHECK(res.x[1] == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("Newton reports a singular Jacobian") {
    ResidualFn f = [](const Vector& x) {
        Vector r(2);
        r << x[0] + x[1] - 1, 2 * x[0] + 2 * x[1] - 3;
        return r;
    };
    auto res = newton(f, Vector::Zero(2));
    CHECK(res.status == NewtonStatus::SingularJacobian);
}

TEST_CASE("multistart finds and sorts all roots") {
    ResidualFn f = [](const Vector& x) {
        Vector r(1);
        r << (x[0] - 1) * (x[0] + 2) * (x[0] - 3);
        return r;
    };
    auto starts = halton_box(64, Vector::Constant(1, -5), Vector::Constant(1, 5));
    auto set = multistart(f, starts);
    REQUIRE(set.size() == 3);
    CHECK(set.solutions[0][0] == doctest::Approx(-2));
    CHECK(set.solutions[1][0] == doctest::Approx(1));
    CHECK(set.solutions[2][0] == doctest::Approx(3));
    CHECK(set.starts_used == 64);
}

TEST_CASE("periodic deduplication merges angles modulo 2 pi") {
    ResidualFn f = [](const Vector& x) {
        Vector r(1);
        r << std::sin(x[0] - 0.5);
        return r;
    };
    MultistartOptions o;
    o.periodic = {true};
    auto starts = grid_box(50, Vector::Constant(1, -20), Vector::Constant(1, 20));
    auto set = multistart(f, starts, o);
    REQUIRE(set.size() == 2);
    CHECK(set.solutions[0][0] == doctest::Approx(0.5 - std::numbers::pi));
    CHECK(set.solutions[1][0] == doctest::Approx(0.5));
}

TEST_CASE("wrap_angle lands in (-pi, pi]") {
    CHECK(wrap_angle(std::numbers::pi) == doctest::Approx(std::numbers::pi));
    CHECK(wrap_angle(-std::numbers::pi) == doctest::Approx(std::numbers::pi));
    CHECK(wrap_angle(7.0) == doctest::Approx(7.0 - 2 * std::numbers::pi));
}

TEST_CASE("Halton points are deterministic and inside the box") {
    Vector lo = Vector::Constant(3, -1), hi = Vector::Constant(3, 2);
    auto a = halton_box(100, lo, hi), b = halton_box(100, lo, hi);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i] == b[i]);
        CHECK((a[i].array() >= -1).all());
        CHECK((a[i].array() <= 2).all());
    }
}

TEST_CASE("real quadratics") {
    auto two = quadratic_real(1, -3, 2);
    REQUIRE(two.roots.size() == 2);
    CHECK(two.roots[0] == doctest::Approx(1));
    CHECK(two.roots[1] == doctest::Approx(2));
    CHECK(quadratic_real(1, 0, 1).roots.empty());
    CHECK(quadratic_real(0, 2, -4).roots == std::vector<double>{2});
    CHECK_THROWS_AS(quadratic_real(0, 0, 1), Error);
    // cancellation-prone case
    auto small = quadratic_real(1, 1e8, 1);
    CHECK(small.roots[1] == doctest::Approx(-1e-8).epsilon(1e-12));
}

TEST_CASE("complex quadratic roots satisfy the equation") {
    const Complex a(1, 2), b(-3, 1), c(0.5, -4);
    for (Complex z : quadratic_complex(a, b, c)) CHECK(std::abs(a * z * z + b * z + c) < 1e-12);
}

TEST_CASE("bracketing finds every sign change") {
    auto roots = bracket_roots([](double x) { return std::sin(3 * x); }, -2, 2);
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == doctest::Approx(-std::numbers::pi / 3));
    CHECK(roots[1] == doctest::Approx(0).epsilon(1e-12));
    CHECK(roots[2] == doctest::Approx(std::numbers::pi / 3));
}

}
