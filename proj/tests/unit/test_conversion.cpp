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

#include <Eigen/Dense>

#include "doctest.h"
#include "gen.hpp"

#include "phforge/conversion.hpp"
#include "phforge/error.hpp"

using namespace phforge;

TEST_SUITE("conversion") {

TEST_CASE("M times M^-1 is the identity up to degree 10") {
    for (int n = 0; n <= kMaxDegree; ++n) {
        const auto& p = conversion(n);
        const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n + 1, n + 1);
        CHECK((p.m * p.minv - id).cwiseAbs().maxCoeff() < 1e-11);
        CHECK((p.g - p.g.transpose()).cwiseAbs().maxCoeff() < 1e-15);
    }
}

TEST_CASE("columns of M are the Bernstein coefficients of the Legendre basis") {
    // Oracle: evaluate both sides at sample points.
    for (int n = 1; n <= 6; ++n) {
        const auto& p = conversion(n);
        for (int k = 0; k <= n; ++k) {
            for (double t : {0.0, 0.21, 0.5, 0.77, 1.0}) {
                double s = 0.0;
                for (int i = 0; i <= n; ++i) s += p.m(i, k) * bernstein_basis(n, i, t);
                CHECK(s == doctest::Approx(legendre_basis(k, t)).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("largest singular value of M^-1 is 1/sqrt(n+1)") {
    for (int n = 1; n <= 6; ++n) {
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(conversion(n).minv);
        CHECK(svd.singularValues()(0) == doctest::Approx(1.0 / std::sqrt(n + 1.0)).epsilon(1e-12));
    }
}

TEST_CASE("basis round trip") {
    test::Gen g;
    for (int i = 0; i < 200; ++i) {
        auto p = g.poly_exact(g.integer(0, kMaxDegree));
        auto back = convert(convert(p, Basis::Legendre), Basis::Bernstein);
        CHECK(approx_equal(p, back, 1e-11));
    }
}

TEST_CASE("degree out of range") {
    CHECK_THROWS_AS(build_conversion(-1), Error);
    CHECK_THROWS_AS(build_conversion(kMaxDegree + 1), Error);
}

TEST_CASE("quadratic example in both bases") {
    const double s3 = std::sqrt(3.0), s5 = std::sqrt(5.0);
    auto c = convert(ComplexPoly::bernstein({{5, 2}, {-3, -4}, {5, 1}}), Basis::Legendre);
    CHECK(std::abs(c[0] - Complex(7.0 / 3, -1.0 / 3)) < 1e-14);
    CHECK(std::abs(c[1] - Complex(0, -s3 / 6)) < 1e-14);
    CHECK(std::abs(c[2] - Complex(8 * s5 / 15, 11 * s5 / 30)) < 1e-14);
}

}
